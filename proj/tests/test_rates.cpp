#include <gtest/gtest.h>

#include <cmath>

#include "calderon/rates.hpp"
#include "calderon/types.hpp"

using namespace calderon;

namespace {

const std::vector<double> kDyadic3{1.0, 0.5, 0.25};
const std::vector<double> kDyadic4{1.0, 0.5, 0.25, 0.125};

// Least squares via Eigen's QR, independent of fit_rate.
double polyfit_slope(const std::vector<double>& hs, const std::vector<double>& vs) {
  const int n = static_cast<int>(hs.size());
  RealMatrix a(n, 2);
  RealVector b(n);
  for (int i = 0; i < n; ++i) {
    a(i, 0) = std::log(hs[i]);
    a(i, 1) = 1.0;
    b(i) = std::log(vs[i]);
  }
  return a.colPivHouseholderQr().solve(b)(0);
}

}  // namespace

TEST(FitRate, ExactPowerLaw) {
  EXPECT_NEAR(fit_rate(kDyadic3, {1.0, 1.0 / 8.0, 1.0 / 64.0}), 3.0, 1e-12);
  const std::vector<double> hs{0.3, 0.17, 0.09, 0.031};
  std::vector<double> vs;
  for (double h : hs) vs.push_back(2.5 * std::pow(h, 1.37));
  EXPECT_NEAR(fit_rate(hs, vs), 1.37, 1e-12);
}

TEST(FitRate, ConstantGivesZero) {
  EXPECT_NEAR(fit_rate(kDyadic4, {2.0, 2.0, 2.0, 2.0}), 0.0, 1e-14);
}

TEST(FitRate, MatchesIndependentLeastSquares) {
  const std::vector<double> col{1.0025e-3, 8.0813e-5, 5.9248e-6, 3.8476e-6};
  EXPECT_NEAR(fit_rate(kDyadic4, col), polyfit_slope(kDyadic4, col), 1e-12);
}

TEST(FitRate, RejectsBadSeries) {
  EXPECT_THROW(fit_rate(kDyadic3, {1.0, 0.0, 0.1}), std::invalid_argument);
  EXPECT_THROW(fit_rate(kDyadic3, {1.0, -1.0, 0.1}), std::invalid_argument);
  EXPECT_THROW(fit_rate({1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(fit_rate({1.0, 2.0}, {1.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(fit_rate(kDyadic3, {1.0, 0.5}), std::invalid_argument);
}

TEST(ConsecutiveRates, GeometricSeries) {
  for (double r : consecutive_rates(kDyadic4, {1.0, 0.25, 0.0625, 0.015625})) EXPECT_NEAR(r, 2.0, 1e-14);
}

TEST(ConsecutiveRates, RandomDiagonalFluctuation) {
  const auto r = consecutive_rates(kDyadic4, {34.701, 11.577, 1718.6, 6.2075});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 1.58, 0.005);
  EXPECT_NEAR(r[1], -7.21, 0.005);
  EXPECT_NEAR(r[2], 8.11, 0.005);
}

TEST(ConsecutiveRates, BumpGivesNegativeEntry) {
  const auto r = consecutive_rates(kDyadic4, {1.0, 0.5, 0.6, 0.2});
  EXPECT_GT(r[0], 0.0);
  EXPECT_LT(r[1], 0.0);
}

TEST(Classify, PassWithinTenPercent) {
  std::vector<double> vs;
  for (double h : kDyadic4) vs.push_back(std::pow(h, 2.75));
  EXPECT_EQ(classify(kDyadic4, vs, 3.0).verdict, Verdict::Pass);
  vs.clear();
  for (double h : kDyadic4) vs.push_back(std::pow(h, 2.65));
  EXPECT_EQ(classify(kDyadic4, vs, 3.0).verdict, Verdict::Fail);
}

TEST(Classify, StagnationFails) {
  // ooc -0.13 against an expected 2
  std::vector<double> vs;
  for (double h : kDyadic4) vs.push_back(std::pow(h, -0.13));
  const RateVerdict v = classify(kDyadic4, vs, 2.0);
  EXPECT_EQ(v.verdict, Verdict::Fail);
  EXPECT_NEAR(v.fitted_rate, -0.13, 1e-12);
}

TEST(Classify, MachinePrecision) {
  const RateVerdict v = classify(kDyadic4, {4.1e-8, 3.9e-8, 4.3e-8, 4.0e-8}, 2.0, {1e-6});
  EXPECT_EQ(v.verdict, Verdict::MachinePrecision);
  EXPECT_TRUE(is_pass(v.verdict));
  // without a floor the same numbers are a sign change
  EXPECT_EQ(classify(kDyadic4, {4.1e-8, 3.9e-8, 4.3e-8, 4.0e-8}, 2.0).verdict, Verdict::Fluctuating);
}

TEST(Classify, Fluctuating) {
  const RateVerdict v = classify(kDyadic4, {34.701, 11.577, 1718.6, 6.2075}, 1.5);
  EXPECT_EQ(v.verdict, Verdict::Fluctuating);
  EXPECT_FALSE(is_pass(v.verdict));
  // a jump larger than the band without a sign change
  EXPECT_EQ(classify(kDyadic3, {1.0, 0.5, 0.5 / 32.0}, 1.0).verdict, Verdict::Fluctuating);
  EXPECT_EQ(classify(kDyadic3, {1.0, 0.5, 0.5 / 8.0}, 1.0).verdict, Verdict::Pass);
}

TEST(Classify, LastConsecutiveRateOverridesFit) {
  // fitted below threshold, final step at the expected rate
  const std::vector<double> vs{1.0, 0.9, 0.8, 0.2};
  const RateVerdict v = classify(kDyadic4, vs, 2.0);
  EXPECT_LT(v.fitted_rate, 1.8);
  EXPECT_NEAR(v.consecutive.back(), 2.0, 1e-12);
  EXPECT_EQ(v.verdict, Verdict::Pass);
  // fitted above, final step below
  const RateVerdict w = classify(kDyadic4, {1.0, 1.0 / 16, 1.0 / 256, 1.0 / 512}, 2.0);
  EXPECT_GT(w.fitted_rate, 1.8);
  EXPECT_EQ(w.verdict, Verdict::Fail);
}

TEST(Classify, ScaleInvariant) {
  const std::vector<double> vs{0.3, 0.1, 0.04, 0.012};
  for (double c : {1e-6, 1.0, 1e5}) {
    std::vector<double> scaled;
    for (double v : vs) scaled.push_back(c * v);
    const RateVerdict a = classify(kDyadic4, vs, 1.5, {1e-3});
    const RateVerdict b = classify(kDyadic4, scaled, 1.5, {c * 1e-3});
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_NEAR(a.fitted_rate, b.fitted_rate, 1e-12);
  }
}

TEST(Classify, NonFiniteIsSolverFailure) {
  EXPECT_EQ(classify(kDyadic3, {1.0, NAN, 0.1}, 1.0).verdict, Verdict::SolverFailure);
  EXPECT_STREQ(verdict_symbol(Verdict::SolverFailure), "fail");
  EXPECT_STREQ(verdict_symbol(Verdict::Fluctuating), "⊛");
}

TEST(ClassifyConsecutive, UsesLastStep) {
  EXPECT_EQ(classify_consecutive(kDyadic3, {1.0, 0.125, 0.06}, 1.5).verdict, Verdict::Fail);
  EXPECT_EQ(classify_consecutive(kDyadic3, {1.0, 0.6, 0.2}, 1.5).verdict, Verdict::Pass);
}
