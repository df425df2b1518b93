#include <gtest/gtest.h>

#include <cmath>

#include "calderon/laplace.hpp"
#include "calderon/quadrature.hpp"
#include "oracles.hpp"

using namespace calderon;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// int over reference triangle of a1^p a2^q
double monomial_integral(int p, int q) { return factorial(p) * factorial(q) / factorial(p + q + 2); }

std::array<Vec3, 3> verts(const PanelGeometry& g) { return g.v; }

}  // namespace

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n = 1; n <= 12; ++n) {
    const LineRule r = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.points[i], p);
      EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(TriangleRule, WeightsPositiveAndSumToHalf) {
  for (int order = 1; order <= 14; ++order) {
    const TriangleRule r = gauss_triangle(order);
    double s = 0.0;
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
      EXPECT_GT(r.weights[i], 0.0);
      const auto& p = r.points[i];
      EXPECT_GE(p[0], 0.0);
      EXPECT_GE(p[1], 0.0);
      EXPECT_LE(p[0] + p[1], 1.0 + 1e-15);
      s += r.weights[i];
    }
    EXPECT_NEAR(s, 0.5, 1e-14);
  }
}

TEST(TriangleRule, ExactUpToItsDegree) {
  for (int order = 1; order <= 14; ++order) {
    const TriangleRule r = gauss_triangle(order);
    for (int p = 0; p <= order; ++p) {
      for (int q = 0; p + q <= order; ++q) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.weights.size(); ++i) {
          s += r.weights[i] * std::pow(r.points[i][0], p) * std::pow(r.points[i][1], q);
        }
        EXPECT_NEAR(s, monomial_integral(p, q), 1e-14) << "order " << order << " p " << p << " q " << q;
      }
    }
  }
}

TEST(TriangleRule, RejectsBadOrder) {
  EXPECT_THROW(gauss_triangle(0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(ClassifyPair, KindsAndPermutations) {
  const std::array<int, 3> a{0, 1, 2};
  EXPECT_EQ(classify_pair(a, a).kind, PairKind::Identical);
  EXPECT_EQ(classify_pair(a, {5, 6, 7}).kind, PairKind::Disjoint);

  const PairClass e = classify_pair(a, {2, 9, 1});
  EXPECT_EQ(e.kind, PairKind::CommonEdge);
  const std::array<int, 3> b{2, 9, 1};
  for (int k = 0; k < 2; ++k) EXPECT_EQ(a[e.perm_a[k]], b[e.perm_b[k]]);
  EXPECT_NE(b[e.perm_b[2]], a[0]);

  const PairClass v = classify_pair(a, {7, 8, 1});
  EXPECT_EQ(v.kind, PairKind::CommonVertex);
  EXPECT_EQ(a[v.perm_a[0]], 1);
  EXPECT_EQ(v.perm_b[0], 2);
}

TEST(ClassifyPair, SymmetricOnMesh) {
  const Mesh m = make_sphere_mesh(1);
  for (std::size_t a = 0; a < m.panel_count(); ++a) {
    for (std::size_t b = 0; b < m.panel_count(); ++b) {
      EXPECT_EQ(classify_pair(m, a, b).kind, classify_pair(m, b, a).kind);
    }
  }
}

TEST(SauterSchwab, WeightsSumToQuarter) {
  for (PairKind k : {PairKind::Identical, PairKind::CommonEdge, PairKind::CommonVertex}) {
    for (int order : {2, 3, 5}) {
      const PairRule r = sauter_schwab_rule(k, order);
      double s = 0.0;
      for (double w : r.w) s += w;
      EXPECT_NEAR(s, 0.25, 1e-14) << to_string(k);
      for (std::size_t q = 0; q < r.w.size(); ++q) {
        EXPECT_GE(r.s[q][0], -1e-15);
        EXPECT_GE(r.s[q][1], -1e-15);
        EXPECT_LE(r.s[q][0] + r.s[q][1], 1.0 + 1e-15);
        EXPECT_LE(r.t[q][0] + r.t[q][1], 1.0 + 1e-15);
      }
    }
  }
  EXPECT_THROW(sauter_schwab_rule(PairKind::Disjoint, 3), std::invalid_argument);
}

TEST(SauterSchwab, SmoothIntegrandMatchesTensorRule) {
  // For smooth integrands the singular rules must agree with a plain rule.
  const Mesh m = make_cube_mesh(1);
  const PairQuadrature ss({12, 8});
  const PairQuadrature plain({12, 1});
  auto f = [](const Vec3& x, const Vec3& y) { return std::exp(x.dot(y)) + x(0) * y(1) * y(1); };
  for (std::size_t b : {0, 1, 2, 5}) {
    const PairClass pc = classify_pair(m, 0, b);
    PairClass flat = pc;
    flat.kind = PairKind::Disjoint;
    const double ref = integrate_pair(plain, m.geometry()[0], m.geometry()[b], flat, f);
    const double val = integrate_pair(ss, m.geometry()[0], m.geometry()[b], pc, f);
    EXPECT_NEAR(val, ref, 1e-9 * std::abs(ref)) << to_string(pc.kind);
  }
}

TEST(Oracle, PotentialMatchesQuadratureAwayFromPanel) {
  const std::array<Vec3, 3> t{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.2, 0.9, 0)};
  const PanelGeometry g = make_panel_geometry(t[0], t[1], t[2]);
  const TriangleRule r = gauss_triangle(20);
  for (const Vec3& x : {Vec3(0.3, 0.3, 2.0), Vec3(-1.0, 0.5, 0.7), Vec3(2.0, 2.0, -0.5)}) {
    const double q = integrate_panel(r, g, [&](const Vec3& y) { return 1.0 / (x - y).norm(); });
    EXPECT_NEAR(oracle::triangle_potential(t, x), q, 1e-11);
  }
}

TEST(SingularQuadrature, SingleLayerMatchesOracle) {
  // Identical, edge-adjacent (bent) and vertex-adjacent pairs on a sphere
  // mesh, plus a coplanar edge pair on the cube.
  const Mesh sphere = make_sphere_mesh(1);
  const Mesh cube = make_cube_mesh(2);
  const PairQuadrature quad({4, 8});
  auto kernel = [](const Vec3& x, const Vec3& y) { return laplace_kernel(x, y); };
  int checked[4] = {0, 0, 0, 0};
  for (const Mesh* m : {&sphere, &cube}) {
    for (std::size_t b = 0; b < m->panel_count(); ++b) {
      const PairClass pc = classify_pair(*m, 0, b);
      if (pc.kind == PairKind::Disjoint || checked[static_cast<int>(pc.kind)] >= 3) continue;
      ++checked[static_cast<int>(pc.kind)];
      const double ref = oracle::single_layer_pair(verts(m->geometry()[0]), verts(m->geometry()[b]));
      const double val = integrate_pair(quad, m->geometry()[0], m->geometry()[b], pc, kernel);
      EXPECT_NEAR(val, ref, 1e-6 * std::abs(ref)) << to_string(pc.kind) << " panel " << b;
    }
  }
  EXPECT_GE(checked[static_cast<int>(PairKind::Identical)], 2);
  EXPECT_GE(checked[static_cast<int>(PairKind::CommonEdge)], 3);
  EXPECT_GE(checked[static_cast<int>(PairKind::CommonVertex)], 3);
}

TEST(SingularQuadrature, ErrorDecreasesWithOrder) {
  const Mesh m = make_sphere_mesh(0);
  const double ref = oracle::single_layer_pair(verts(m.geometry()[0]), verts(m.geometry()[0]));
  auto kernel = [](const Vec3& x, const Vec3& y) { return laplace_kernel(x, y); };
  const PairClass pc = classify_pair(m, 0, 0);
  double prev = 1.0;
  for (int order : {1, 2, 4, 6, 8}) {
    const PairQuadrature quad({4, order});
    const double err = std::abs(integrate_pair(quad, m.geometry()[0], m.geometry()[0], pc, kernel) - ref);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev / ref, 1e-8);
}

TEST(SingularQuadrature, RuleConvergence) {
  const Mesh m = make_cube_mesh(1);
  auto kernel = [](const Vec3& x, const Vec3& y) { return laplace_kernel(x, y); };
  const PairClass pc = classify_pair(m, 3, 3);
  auto value = [&](int order) {
    return integrate_pair(PairQuadrature({4, order}), m.geometry()[3], m.geometry()[3], pc, kernel);
  };
  const double v3 = value(3), v5 = value(5), v7 = value(7);
  EXPECT_LT(std::abs(v3 - v5) / v5, 2e-3);
  EXPECT_LT(std::abs(v5 - v7) / v7, 1e-4);
  EXPECT_LT(std::abs(v5 - v7), std::abs(v3 - v5));
}

TEST(SingularQuadrature, DegradedPresetDiffers) {
  const Mesh m = make_cube_mesh(1);
  auto kernel = [](const Vec3& x, const Vec3& y) { return laplace_kernel(x, y); };
  const PairClass pc = classify_pair(m, 0, 0);
  const double standard = integrate_pair(PairQuadrature({4, 4}), m.geometry()[0], m.geometry()[0], pc, kernel);
  const double degraded = integrate_pair(PairQuadrature({2, 1}), m.geometry()[0], m.geometry()[0], pc, kernel);
  EXPECT_GT(std::abs(standard - degraded), 1e-6 * standard);
}

TEST(IntegratePair, DisjointConstantKernelGivesAreaProduct) {
  const Mesh m = make_cube_mesh(1);
  const PairQuadrature quad;
  std::size_t far = 0;
  for (std::size_t b = 0; b < m.panel_count(); ++b) {
    if (classify_pair(m, 0, b).kind == PairKind::Disjoint) far = b;
  }
  const double v = integrate_pair(quad, m.geometry()[0], m.geometry()[far], classify_pair(m, 0, far),
                                  [](const Vec3&, const Vec3&) { return 1.0; });
  EXPECT_NEAR(v, m.geometry()[0].area * m.geometry()[far].area, 1e-15);
}

TEST(IntegratePair, SymmetricUnderSwap) {
  const Mesh m = make_sphere_mesh(1);
  const PairQuadrature quad;
  auto kernel = [](const Vec3& x, const Vec3& y) { return laplace_kernel(x, y); };
  for (std::size_t b = 0; b < m.panel_count(); ++b) {
    const double ab = integrate_pair(quad, m.geometry()[0], m.geometry()[b], classify_pair(m, 0, b), kernel);
    const double ba = integrate_pair(quad, m.geometry()[b], m.geometry()[0], classify_pair(m, b, 0), kernel);
    EXPECT_NEAR(ab, ba, 1e-4 * std::abs(ab));
  }
}

TEST(IntegratePair, NonFiniteKernelThrows) {
  const Mesh m = make_cube_mesh(1);
  const PairQuadrature quad;
  auto bad = [](const Vec3&, const Vec3&) { return std::nan(""); };
  EXPECT_THROW(integrate_pair(quad, m.geometry()[0], m.geometry()[7], classify_pair(m, 0, 7), bad),
               std::runtime_error);
}
