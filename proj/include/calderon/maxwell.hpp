#pragma once

#include "calderon/galerkin.hpp"
#include "calderon/quadrature.hpp"

namespace calderon {

/// G_k(x, y) = exp(i k r) / (4 pi r), r = |x - y|.
inline cplx helmholtz_kernel(cplx k, double r) {
  return std::exp(cplx(0.0, 1.0) * k * r) / (4.0 * kPi * r);
}

/// Electric field operator on RWG x RWG:
/// E_ij = -ik <G_k b_i, b_j> - 1/(ik) <G_k div b_i, div b_j>.
ComplexGalerkin assemble_efie(const SpacePtr& rwg, cplx k, const QuadratureOptions& q = {});
/// Magnetic field operator on RWG x RWG:
/// H_ij = int int b_i(x) . (grad_x G_k(x, y) x b_j(y)).
ComplexGalerkin assemble_mfie(const SpacePtr& rwg, cplx k, const QuadratureOptions& q = {});

/// M_ij = int (n x b_i) . b_j, test SNC, trial RWG.
RealGalerkin assemble_snc_rwg_mass(const SpacePtr& snc, const SpacePtr& rwg);

struct MaxwellOperators {
  SpacePtr rwg, snc;
  cplx k;
  ComplexGalerkin E, H;
  RealGalerkin M;
};

MaxwellOperators assemble_maxwell(std::shared_ptr<const Mesh> mesh, cplx k,
                                  const QuadratureOptions& q = {});

}  // namespace calderon
