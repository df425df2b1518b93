#include "calderon/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace calderon {

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::Identical: return "identical";
    case PairKind::CommonEdge: return "edge";
    case PairKind::CommonVertex: return "vertex";
    case PairKind::Disjoint: return "disjoint";
  }
  return "?";
}

LineRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs at least one point");
  LineRule r;
  r.points.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    r.points[i] = 0.5 * (1.0 - x);
    r.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

namespace {

void add_orbit3(TriangleRule& r, double a, double w) {
  const double b = 1.0 - 2.0 * a;
  r.points.push_back({a, a});
  r.points.push_back({b, a});
  r.points.push_back({a, b});
  for (int i = 0; i < 3; ++i) r.weights.push_back(0.5 * w);
}

TriangleRule collapsed_rule(int order) {
  const int n = (order + 3) / 2;
  const LineRule g = gauss_legendre(n);
  TriangleRule r;
  r.degree = order;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = g.points[i], v = g.points[j];
      r.points.push_back({u * (1.0 - v), u * v});
      r.weights.push_back(g.weights[i] * g.weights[j] * u);
    }
  }
  return r;
}

}  // namespace

TriangleRule gauss_triangle(int order) {
  if (order < 1 || order > 40) throw std::invalid_argument("unsupported triangle rule order");
  TriangleRule r;
  r.degree = order;
  switch (order) {
    case 1:
      r.points = {{1.0 / 3.0, 1.0 / 3.0}};
      r.weights = {0.5};
      return r;
    case 2:
      add_orbit3(r, 1.0 / 6.0, 1.0 / 3.0);
      return r;
    case 3:
    case 4:
      add_orbit3(r, 0.445948490915965, 0.223381589678011);
      add_orbit3(r, 0.091576213509771, 0.109951743655322);
      return r;
    case 5:
      r.points = {{1.0 / 3.0, 1.0 / 3.0}};
      r.weights = {0.5 * 0.225};
      add_orbit3(r, 0.470142064105115, 0.132394152788506);
      add_orbit3(r, 0.101286507323456, 0.125939180544827);
      return r;
    default:
      return collapsed_rule(order);
  }
}

PairClass classify_pair(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  PairClass pc;
  std::array<int, 3> sa{}, sb{};
  int shared = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (a[i] == b[j]) {
        sa[shared] = i;
        sb[shared] = j;
        ++shared;
      }
    }
  }
  auto complete = [](std::array<int, 3> p, int n) {
    for (int k = 0; k < 3 && n < 3; ++k) {
      if (std::find(p.begin(), p.begin() + n, k) == p.begin() + n) p[n++] = k;
    }
    return p;
  };
  switch (shared) {
    case 0: pc.kind = PairKind::Disjoint; return pc;
    case 1: pc.kind = PairKind::CommonVertex; break;
    case 2: pc.kind = PairKind::CommonEdge; break;
    default: pc.kind = PairKind::Identical; break;
  }
  pc.perm_a = complete(sa, shared);
  pc.perm_b = complete(sb, shared);
  return pc;
}

PairClass classify_pair(const Mesh& mesh, std::size_t a, std::size_t b) {
  return classify_pair(mesh.panels()[a], mesh.panels()[b]);
}

PairRule tensor_rule(const TriangleRule& rule) {
  PairRule r;
  const std::size_t n = rule.weights.size();
  r.s.reserve(n * n);
  r.t.reserve(n * n);
  r.w.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.s.push_back(rule.points[i]);
      r.t.push_back(rule.points[j]);
      r.w.push_back(rule.weights[i] * rule.weights[j]);
    }
  }
  return r;
}

// The rules live on pairs of triangles {0 <= y <= x <= 1}; points are mapped
// to the unit triangle by (x, y) -> (x - y, y) at the end.
PairRule sauter_schwab_rule(PairKind kind, int order) {
  if (kind == PairKind::Disjoint) throw std::invalid_argument("no singular rule for disjoint pairs");
  if (order < 1) throw std::invalid_argument("singular order must be >= 1");
  const LineRule g = gauss_legendre(order);
  PairRule r;
  auto push = [&r](double x1, double y1, double x2, double y2, double w) {
    r.s.push_back({x1 - y1, y1});
    r.t.push_back({x2 - y2, y2});
    r.w.push_back(w);
  };
  for (int a = 0; a < order; ++a) {
    const double xi = g.points[a];
    for (int b = 0; b < order; ++b) {
      const double e1 = g.points[b];
      for (int c = 0; c < order; ++c) {
        const double e2 = g.points[c];
        for (int d = 0; d < order; ++d) {
          const double e3 = g.points[d];
          const double w = g.weights[a] * g.weights[b] * g.weights[c] * g.weights[d];
          const double xi3 = xi * xi * xi;
          switch (kind) {
            case PairKind::Identical: {
              const double lw = w * xi3 * e1 * e1 * e2;
              push(xi, xi * (1 - e1 + e1 * e2), xi * (1 - e1 * e2 * e3), xi * (1 - e1), lw);
              push(xi * (1 - e1 * e2 * e3), xi * (1 - e1), xi, xi * (1 - e1 + e1 * e2), lw);
              push(xi, xi * e1 * (1 - e2 + e2 * e3), xi * (1 - e1 * e2), xi * e1 * (1 - e2), lw);
              push(xi * (1 - e1 * e2), xi * e1 * (1 - e2), xi, xi * e1 * (1 - e2 + e2 * e3), lw);
              push(xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), xi, xi * e1 * (1 - e2), lw);
              push(xi, xi * e1 * (1 - e2), xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), lw);
              break;
            }
            case PairKind::CommonEdge: {
              const double lw0 = w * xi3 * e1 * e1;
              const double lw = lw0 * e2;
              push(xi, xi * e1 * e3, xi * (1 - e1 * e2), xi * e1 * (1 - e2), lw0);
              push(xi, xi * e1, xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3), lw);
              push(xi * (1 - e1 * e2), xi * e1 * (1 - e2), xi, xi * e1 * e2 * e3, lw);
              push(xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3), xi, xi * e1, lw);
              push(xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), xi, xi * e1 * e2, lw);
              break;
            }
            case PairKind::CommonVertex: {
              const double lw = w * xi3 * e2;
              push(xi, xi * e1, xi * e2, xi * e2 * e3, lw);
              push(xi * e2, xi * e2 * e3, xi, xi * e1, lw);
              break;
            }
            case PairKind::Disjoint: break;
          }
        }
      }
    }
  }
  return r;
}

PairQuadrature::PairQuadrature(QuadratureOptions opts) : opts_(opts) {
  rules_[static_cast<int>(PairKind::Identical)] = sauter_schwab_rule(PairKind::Identical, opts.singular);
  rules_[static_cast<int>(PairKind::CommonEdge)] = sauter_schwab_rule(PairKind::CommonEdge, opts.singular);
  rules_[static_cast<int>(PairKind::CommonVertex)] = sauter_schwab_rule(PairKind::CommonVertex, opts.singular);
  rules_[static_cast<int>(PairKind::Disjoint)] = tensor_rule(gauss_triangle(opts.regular));
}

}  // namespace calderon
