#pragma once

#include <optional>
#include <string>

#include "calderon/laplace.hpp"
#include "calderon/linalg.hpp"
#include "calderon/maxwell.hpp"
#include "calderon/solutions.hpp"

namespace calderon {

/// Discrete Laplace traces: Dirichlet data interpolated into P1, Neumann
/// data L2-projected onto P0.
struct LaplaceData {
  CoeffVector dirichlet;
  CoeffVector neumann;
};

LaplaceData discretize_laplace(const ManufacturedSolution& sol, const LaplaceOperators& ops,
                               int trace_order = 6);

/// Galerkin Calderon residuals. With s = +1 (exterior) or -1 (interior):
///   rho_D = (s M01 / 2 - K) d + V n
///   rho_N = W d + (s M10 / 2 + Kp) n
struct LaplaceResidual {
  ComplexVector rho_d;
  ComplexVector rho_n;
};

LaplaceResidual laplace_residual(const LaplaceOperators& ops, Side side, const LaplaceData& data);

/// Outcome of a manufactured-solution solve. `error` is only meaningful when
/// `ok` is set.
struct MmsResult {
  bool ok = false;
  double error = 0.0;
  SolveResult solve;
  std::string failure;
};

/// Solve V w = (K - s M01 / 2) d with the system matrices of `system` and
/// measure e_N = ||n - w||_V in the unperturbed V of `clean`.
MmsResult laplace_mms_neumann(const LaplaceOperators& clean, const LaplaceOperators& system,
                              Side side, const LaplaceData& data, double tol = 1e-10);
/// Solve Wm v = -(s M10 / 2 + Kp) n and measure e_D = ||d - v||_Wtilde.
MmsResult laplace_mms_dirichlet(const LaplaceOperators& clean, const LaplaceOperators& system,
                                Side side, const LaplaceData& data, double tol = 1e-10);

/// Discrete Maxwell traces on RWG: the tangential trace and the scaled
/// magnetic trace -gamma_R u / (ik).
struct MaxwellData {
  CoeffVector tangential;
  CoeffVector magnetic;
};
/// How traces are mapped into RWG. The edge interpolant commutes with the
/// surface divergence; the L2 projection does not, which costs one order in
/// the residual and MMS rates.
enum class RwgTraceMap { Interpolant, L2 };
const char* to_string(RwgTraceMap m);
RwgTraceMap parse_rwg_trace_map(const std::string& s);
MaxwellData discretize_maxwell(const ManufacturedSolution& sol, const MaxwellOperators& ops,
                               RwgTraceMap map = RwgTraceMap::Interpolant, int trace_order = 6);
/// With s = +1 (interior) or -1 (exterior), x the tangential and m the
/// scaled magnetic coefficients:
///   rho_1 = E m + (s M / 2 + H) x
///   rho_2 = -E x + (s M / 2 + H) m
struct MaxwellResidual {
  ComplexVector rho_1;
  ComplexVector rho_2;
};

MaxwellResidual maxwell_residual(const MaxwellOperators& ops, Side side, const MaxwellData& data);

/// Solve E w = -(s M / 2 + H) x and measure e_R = ||m - w||_E in the
/// unperturbed E.
MmsResult maxwell_mms(const MaxwellOperators& clean, const MaxwellOperators& system, Side side,
                      const MaxwellData& data, double tol = 1e-10);

double norm_inf(const ComplexVector& v);

}  // namespace calderon
