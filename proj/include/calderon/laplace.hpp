#pragma once

#include "calderon/galerkin.hpp"
#include "calderon/quadrature.hpp"

namespace calderon {

/// G(x, y) = 1 / (4 pi |x - y|)
inline double laplace_kernel(const Vec3& x, const Vec3& y) {
  return 1.0 / (4.0 * kPi * (x - y).norm());
}

/// Single layer on P0 x P0.
RealGalerkin assemble_single_layer(const SpacePtr& p0, const QuadratureOptions& q = {});
/// Double layer, test P0, trial P1. Kernel d/dn_y G, so that
/// (1/2 M + K) 1 vanishes for the outward normal.
RealGalerkin assemble_double_layer(const SpacePtr& p0, const SpacePtr& p1,
                                   const QuadratureOptions& q = {});
/// Adjoint double layer, test P1, trial P0. Kernel d/dn_x G.
RealGalerkin assemble_adjoint_double_layer(const SpacePtr& p1, const SpacePtr& p0,
                                           const QuadratureOptions& q = {});
/// Hypersingular operator on P1 x P1 through surface curls.
RealGalerkin assemble_hypersingular(const SpacePtr& p1, const QuadratureOptions& q = {});
/// W + a a^T with a_i the integral of the i-th hat function.
RealGalerkin stabilize_hypersingular(const RealGalerkin& w);
/// Elliptic companion of W with the Yukawa kernel exp(-r) / (4 pi r):
/// curl-curl part plus normal-weighted mass part.
RealGalerkin assemble_w_tilde(const SpacePtr& p1, const QuadratureOptions& q = {});

/// a_i = integral of hat function i.
RealVector p1_integrals(const FunctionSpace& p1);

/// All Laplace matrices on one mesh, computed in a shared pass.
struct LaplaceOperators {
  SpacePtr p0, p1;
  RealGalerkin V, K, Kp, W, Wm, Wtilde;
  RealMatrix M01;  // test P0, trial P1
  RealMatrix M10;  // test P1, trial P0
};

LaplaceOperators assemble_laplace(std::shared_ptr<const Mesh> mesh, const QuadratureOptions& q = {});

}  // namespace calderon
