#pragma once

#include <string>
#include <vector>

namespace calderon {

enum class Verdict { Pass, Fail, MachinePrecision, Fluctuating, SolverFailure };

const char* to_string(Verdict v);
/// Table symbol: ✓, ✗, *, ⊛ or "fail" for solver failures.
const char* verdict_symbol(Verdict v);
bool is_pass(Verdict v);

/// Least-squares slope of log(value) against log(h). Needs >= 2 points,
/// positive values and strictly decreasing h.
double fit_rate(const std::vector<double>& hs, const std::vector<double>& values);

/// r_k = log(v_k / v_{k+1}) / log(h_k / h_{k+1}).
std::vector<double> consecutive_rates(const std::vector<double>& hs, const std::vector<double>& values);

struct ClassifyOptions {
  double machine_floor = 0.0;
  double fluctuation_band = 3.0;
  double tolerance = 0.9;  // pass if rate >= tolerance * expected
};

struct RateVerdict {
  Verdict verdict = Verdict::Fail;
  double fitted_rate = 0.0;
  std::vector<double> consecutive;
  double expected_rate = 0.0;
};

/// Verdict of a convergence study. The fitted rate decides unless the last
/// consecutive rate leads to the opposite pass/fail outcome, in which case
/// the consecutive rate decides.
RateVerdict classify(const std::vector<double>& hs, const std::vector<double>& values,
                     double expected, const ClassifyOptions& opts = {});

/// Same taxonomy driven by consecutive rates only: pass iff the last
/// consecutive rate reaches the threshold. Used for manufactured-solution
/// errors.
RateVerdict classify_consecutive(const std::vector<double>& hs, const std::vector<double>& values,
                                 double expected, const ClassifyOptions& opts = {});

}  // namespace calderon
