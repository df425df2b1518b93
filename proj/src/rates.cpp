#include "calderon/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace calderon {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::MachinePrecision: return "machine-precision";
    case Verdict::Fluctuating: return "fluctuating";
    case Verdict::SolverFailure: return "solver-failure";
  }
  return "?";
}

const char* verdict_symbol(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "✓";
    case Verdict::Fail: return "✗";
    case Verdict::MachinePrecision: return "*";
    case Verdict::Fluctuating: return "⊛";
    case Verdict::SolverFailure: return "fail";
  }
  return "?";
}

bool is_pass(Verdict v) { return v == Verdict::Pass || v == Verdict::MachinePrecision; }

namespace {

void check_series(const std::vector<double>& hs, const std::vector<double>& values) {
  if (hs.size() != values.size()) throw std::invalid_argument("rate series length mismatch");
  if (hs.size() < 2) throw std::invalid_argument("rate series needs at least two points");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!(hs[i] > 0.0)) throw std::invalid_argument("meshwidths must be positive");
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::invalid_argument("rate values must be positive and finite");
    }
    if (i > 0 && !(hs[i] < hs[i - 1])) throw std::invalid_argument("meshwidths must decrease");
  }
}

}  // namespace

double fit_rate(const std::vector<double>& hs, const std::vector<double>& values) {
  check_series(hs, values);
  const double n = static_cast<double>(hs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sx += std::log(hs[i]);
    sy += std::log(values[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double dx = std::log(hs[i]) - mx;
    sxy += dx * (std::log(values[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<double> consecutive_rates(const std::vector<double>& hs, const std::vector<double>& values) {
  check_series(hs, values);
  std::vector<double> r;
  for (std::size_t k = 0; k + 1 < hs.size(); ++k) {
    r.push_back(std::log(values[k] / values[k + 1]) / std::log(hs[k] / hs[k + 1]));
  }
  return r;
}

namespace {

// Returns true and sets the verdict for the cases that do not depend on the
// governing rate.
bool pre_classify(const std::vector<double>& hs, const std::vector<double>& values,
                  const ClassifyOptions& opts, RateVerdict& out) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      out.verdict = Verdict::SolverFailure;
      return true;
    }
  }
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v < opts.machine_floor; })) {
    out.verdict = Verdict::MachinePrecision;
    return true;
  }
  if (std::any_of(values.begin(), values.end(), [](double v) { return !(v > 0.0); })) {
    // exact zeros below a zero floor: nothing to measure
    out.verdict = Verdict::MachinePrecision;
    return true;
  }
  out.fitted_rate = fit_rate(hs, values);
  out.consecutive = consecutive_rates(hs, values);
  const auto& c = out.consecutive;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const bool sign_change = (c[k] < 0.0) != (c[k + 1] < 0.0);
    if (sign_change || std::abs(c[k] - c[k + 1]) > opts.fluctuation_band) {
      out.verdict = Verdict::Fluctuating;
      return true;
    }
  }
  return false;
}

}  // namespace

RateVerdict classify(const std::vector<double>& hs, const std::vector<double>& values,
                     double expected, const ClassifyOptions& opts) {
  RateVerdict out;
  out.expected_rate = expected;
  if (pre_classify(hs, values, opts, out)) return out;
  const double threshold = opts.tolerance * expected;
  const bool fitted_pass = out.fitted_rate >= threshold;
  const bool last_pass = out.consecutive.back() >= threshold;
  out.verdict = (fitted_pass == last_pass ? fitted_pass : last_pass) ? Verdict::Pass : Verdict::Fail;
  return out;
}

RateVerdict classify_consecutive(const std::vector<double>& hs, const std::vector<double>& values,
                                 double expected, const ClassifyOptions& opts) {
  RateVerdict out;
  out.expected_rate = expected;
  if (pre_classify(hs, values, opts, out)) return out;
  out.verdict = out.consecutive.back() >= opts.tolerance * expected ? Verdict::Pass : Verdict::Fail;
  return out;
}

}  // namespace calderon
