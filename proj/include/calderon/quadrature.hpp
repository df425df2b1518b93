#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "calderon/mesh.hpp"
#include "calderon/types.hpp"

namespace calderon {

/// Gauss-Legendre nodes and weights on [0, 1].
struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;
};
LineRule gauss_legendre(int n);

/// Rule on the reference triangle {(a1, a2): a1, a2 >= 0, a1 + a2 <= 1}.
/// Weights sum to 1/2.
struct TriangleRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Symmetric rule exact for polynomials of total degree `order`.
TriangleRule gauss_triangle(int order);

enum class PairKind { Identical, CommonEdge, CommonVertex, Disjoint };

const char* to_string(PairKind k);

/// Relation between two panels. perm_a / perm_b list the local vertices of
/// each panel with the shared vertices first, in matching order.
struct PairClass {
  PairKind kind = PairKind::Disjoint;
  std::array<int, 3> perm_a{0, 1, 2};
  std::array<int, 3> perm_b{0, 1, 2};
};

PairClass classify_pair(const std::array<int, 3>& a, const std::array<int, 3>& b);
PairClass classify_pair(const Mesh& mesh, std::size_t a, std::size_t b);

/// Reference rule on the product of two reference triangles. Weights sum to
/// 1/4; multiply by 4 |a| |b| to integrate over physical panels.
struct PairRule {
  std::vector<std::array<double, 2>> s;
  std::vector<std::array<double, 2>> t;
  std::vector<double> w;
};

/// Sauter-Schwab rule with `order` Gauss points per coordinate of the
/// four-dimensional parameter cube.
PairRule sauter_schwab_rule(PairKind kind, int order);
PairRule tensor_rule(const TriangleRule& rule);

/// Quadrature orders used by assembly. `singular` is the number of Gauss
/// points per coordinate of the Sauter-Schwab rules, `regular` the degree of
/// the triangle rule used for well-separated pairs.
struct QuadratureOptions {
  int regular = 4;
  int singular = 4;
};

/// Precomputed rules for one set of quadrature options.
class PairQuadrature {
 public:
  explicit PairQuadrature(QuadratureOptions opts = {});
  const PairRule& rule(PairKind k) const { return rules_[static_cast<int>(k)]; }
  const QuadratureOptions& options() const { return opts_; }

  /// Calls f(x, y, lam_x, lam_y, weight) for every quadrature node of the
  /// panel pair. Barycentric coordinates refer to each panel's own vertex
  /// order; weights include the surface Jacobians.
  template <typename F>
  void for_each_point(const PanelGeometry& ga, const PanelGeometry& gb,
                      const PairClass& pc, F&& f) const {
    const PairRule& r = rule(pc.kind);
    const double jac = 4.0 * ga.area * gb.area;
    const Vec3& a0 = ga.v[pc.perm_a[0]];
    const Vec3 da1 = ga.v[pc.perm_a[1]] - a0, da2 = ga.v[pc.perm_a[2]] - a0;
    const Vec3& b0 = gb.v[pc.perm_b[0]];
    const Vec3 db1 = gb.v[pc.perm_b[1]] - b0, db2 = gb.v[pc.perm_b[2]] - b0;
    std::array<double, 3> lx{}, ly{};
    for (std::size_t q = 0; q < r.w.size(); ++q) {
      const auto& s = r.s[q];
      const auto& t = r.t[q];
      const Vec3 x = a0 + s[0] * da1 + s[1] * da2;
      const Vec3 y = b0 + t[0] * db1 + t[1] * db2;
      lx[pc.perm_a[0]] = 1.0 - s[0] - s[1];
      lx[pc.perm_a[1]] = s[0];
      lx[pc.perm_a[2]] = s[1];
      ly[pc.perm_b[0]] = 1.0 - t[0] - t[1];
      ly[pc.perm_b[1]] = t[0];
      ly[pc.perm_b[2]] = t[1];
      f(x, y, lx, ly, r.w[q] * jac);
    }
  }

 private:
  QuadratureOptions opts_;
  std::array<PairRule, 4> rules_;
};

/// Integral of kernel(x, y) over panel pair (a, b).
template <typename Kernel>
auto integrate_pair(const PairQuadrature& quad, const PanelGeometry& a,
                    const PanelGeometry& b, const PairClass& pc, Kernel&& kernel) {
  using R = std::decay_t<decltype(kernel(a.v[0], b.v[0]))>;
  R sum = R(0.0);
  quad.for_each_point(a, b, pc, [&](const Vec3& x, const Vec3& y, const auto&,
                                    const auto&, double w) { sum += w * kernel(x, y); });
  if (!std::isfinite(std::abs(sum))) {
    throw std::runtime_error("non-finite kernel value in panel pair integral");
  }
  return sum;
}

/// Integral of f over a single panel with the given triangle rule.
template <typename F>
auto integrate_panel(const TriangleRule& rule, const PanelGeometry& g, F&& f) {
  const auto& p0 = rule.points[0];
  std::decay_t<decltype(f(g.v[0]))> sum = (2.0 * g.area * rule.weights[0]) * f(g.point(p0[0], p0[1]));
  for (std::size_t q = 1; q < rule.weights.size(); ++q) {
    const auto& p = rule.points[q];
    sum += (2.0 * g.area * rule.weights[q]) * f(g.point(p[0], p[1]));
  }
  return sum;
}

}  // namespace calderon
