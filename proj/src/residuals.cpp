#include "calderon/residuals.hpp"

#include <cmath>
#include <stdexcept>

namespace calderon {

namespace {

double laplace_sign(Side side) { return side == Side::Exterior ? 1.0 : -1.0; }
double maxwell_sign(Side side) { return side == Side::Interior ? 1.0 : -1.0; }

MmsResult finish(SolveResult solve, double error) {
  MmsResult out;
  out.solve = std::move(solve);
  out.error = error;
  out.ok = std::isfinite(error);
  if (!out.ok) out.failure = "non-finite error";
  return out;
}

template <typename Solve>
MmsResult guarded(Solve&& f) {
  try {
    return f();
  } catch (const SingularMatrixError& e) {
    MmsResult out;
    out.failure = e.what();
    return out;
  }
}

}  // namespace

double norm_inf(const ComplexVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

LaplaceData discretize_laplace(const ManufacturedSolution& sol, const LaplaceOperators& ops,
                               int trace_order) {
  if (sol.physics != Physics::Laplace) throw std::invalid_argument("not a Laplace solution");
  return {interpolate_p1(ops.p1, sol.dirichlet), project_p0(ops.p0, sol.neumann, trace_order)};
}

LaplaceResidual laplace_residual(const LaplaceOperators& ops, Side side, const LaplaceData& data) {
  const double s = 0.5 * laplace_sign(side);
  const ComplexVector& d = data.dirichlet.values;
  const ComplexVector& n = data.neumann.values;
  LaplaceResidual r;
  r.rho_d = (s * ops.M01 - ops.K.data) * d + ops.V.data * n;
  r.rho_n = ops.W.data * d + (s * ops.M10 + ops.Kp.data) * n;
  return r;
}

MmsResult laplace_mms_neumann(const LaplaceOperators& clean, const LaplaceOperators& system,
                              Side side, const LaplaceData& data, double tol) {
  return guarded([&] {
    const double s = 0.5 * laplace_sign(side);
    const ComplexVector rhs = (system.K.data - s * system.M01) * data.dirichlet.values;
    SolveResult sol = solve_symmetric(system.V.data, rhs, tol);
    const ComplexVector delta = data.neumann.values - sol.x;
    return finish(std::move(sol), energy_norm(clean.V.data, delta));
  });
}

MmsResult laplace_mms_dirichlet(const LaplaceOperators& clean, const LaplaceOperators& system,
                                Side side, const LaplaceData& data, double tol) {
  return guarded([&] {
    const double s = 0.5 * laplace_sign(side);
    const ComplexVector rhs = -(s * system.M10 + system.Kp.data) * data.neumann.values;
    SolveResult sol = solve_symmetric(system.Wm.data, rhs, tol);
    const ComplexVector delta = data.dirichlet.values - sol.x;
    return finish(std::move(sol), energy_norm(clean.Wtilde.data, delta));
  });
}

const char* to_string(RwgTraceMap m) { return m == RwgTraceMap::Interpolant ? "interp" : "l2"; }

RwgTraceMap parse_rwg_trace_map(const std::string& s) {
  if (s == "interp") return RwgTraceMap::Interpolant;
  if (s == "l2") return RwgTraceMap::L2;
  throw std::invalid_argument("unknown RWG trace map '" + s + "' (interp, l2)");
}

MaxwellData discretize_maxwell(const ManufacturedSolution& sol, const MaxwellOperators& ops,
                               RwgTraceMap map, int trace_order) {
  if (sol.physics != Physics::Maxwell) throw std::invalid_argument("not a Maxwell solution");
  auto discretize = [&](const VectorTrace& f) {
    return map == RwgTraceMap::Interpolant ? interpolate_rwg(ops.rwg, f, trace_order)
                                           : project_rwg(ops.rwg, f, trace_order);
  };
  MaxwellData d;
  d.tangential = discretize(sol.tangential);
  d.magnetic = discretize(sol.magnetic);
  d.magnetic.values /= -cplx(0.0, 1.0) * ops.k;
  return d;
}

MaxwellResidual maxwell_residual(const MaxwellOperators& ops, Side side, const MaxwellData& data) {
  const double s = 0.5 * maxwell_sign(side);
  const ComplexVector& x = data.tangential.values;
  const ComplexVector& m = data.magnetic.values;
  const ComplexMatrix b = s * ops.M.data.cast<cplx>() + ops.H.data;
  return {ops.E.data * m + b * x, -(ops.E.data * x) + b * m};
}

MmsResult maxwell_mms(const MaxwellOperators& clean, const MaxwellOperators& system, Side side,
                      const MaxwellData& data, double tol) {
  return guarded([&] {
    const double s = 0.5 * maxwell_sign(side);
    const ComplexVector rhs = -(s * system.M.data.cast<cplx>() + system.H.data) * data.tangential.values;
    SolveResult sol = solve_general(system.E.data, rhs, tol);
    const ComplexVector delta = data.magnetic.values - sol.x;
    return finish(std::move(sol), energy_norm(clean.E.data, delta));
  });
}

}  // namespace calderon
