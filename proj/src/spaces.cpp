#include "calderon/spaces.hpp"

#include <stdexcept>

namespace calderon {

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::P0: return "P0";
    case SpaceKind::P1: return "P1";
    case SpaceKind::RWG: return "RWG";
    case SpaceKind::SNC: return "SNC";
  }
  return "?";
}

FunctionSpace::FunctionSpace(std::shared_ptr<const Mesh> mesh, SpaceKind kind)
    : mesh_(std::move(mesh)), kind_(kind) {
  if (!mesh_) throw std::invalid_argument("function space without mesh");
  const Mesh& m = *mesh_;
  local_.resize(m.panel_count());
  for (std::size_t p = 0; p < m.panel_count(); ++p) {
    LocalDofs& l = local_[p];
    switch (kind_) {
      case SpaceKind::P0:
        l.count = 1;
        l.dof[0] = static_cast<int>(p);
        break;
      case SpaceKind::P1:
        l.count = 3;
        l.dof = m.panels()[p];
        break;
      case SpaceKind::RWG:
      case SpaceKind::SNC:
        l.count = 3;
        for (int i = 0; i < 3; ++i) {
          l.dof[i] = m.panel_edge(p, i);
          l.sign[i] = m.panel_edge_sign(p, i);
        }
        break;
    }
  }
  switch (kind_) {
    case SpaceKind::P0: dofs_ = m.panel_count(); break;
    case SpaceKind::P1: dofs_ = m.vertex_count(); break;
    default: dofs_ = m.edge_count(); break;
  }
}

SpacePtr make_space(std::shared_ptr<const Mesh> mesh, SpaceKind kind) {
  return std::make_shared<const FunctionSpace>(std::move(mesh), kind);
}

Vec3 p1_surface_curl(const PanelGeometry& g, int slot) {
  return (g.v[(slot + 2) % 3] - g.v[(slot + 1) % 3]) / (2.0 * g.area);
}

double edge_length(const PanelGeometry& g, int slot) {
  return (g.v[(slot + 2) % 3] - g.v[(slot + 1) % 3]).norm();
}

Vec3 rwg_value(const PanelGeometry& g, int slot, int sign, const Vec3& x) {
  return (sign * edge_length(g, slot) / (2.0 * g.area)) * (x - g.v[slot]);
}

double rwg_divergence(const PanelGeometry& g, int slot, int sign) {
  return sign * edge_length(g, slot) / g.area;
}

namespace {

bool is_vector(SpaceKind k) { return k == SpaceKind::RWG || k == SpaceKind::SNC; }

// Values of the local basis functions of a space at one point.
struct LocalValues {
  std::array<double, 3> scalar{};
  std::array<Vec3, 3> vector;
};

void local_values(const FunctionSpace& s, std::size_t p, const PanelGeometry& g,
                  const std::array<double, 3>& lambda, const Vec3& x, LocalValues& out) {
  const LocalDofs& l = s.local(p);
  switch (s.kind()) {
    case SpaceKind::P0: out.scalar[0] = 1.0; break;
    case SpaceKind::P1: out.scalar = lambda; break;
    case SpaceKind::RWG:
      for (int i = 0; i < 3; ++i) out.vector[i] = rwg_value(g, i, l.sign[i], x);
      break;
    case SpaceKind::SNC:
      for (int i = 0; i < 3; ++i) out.vector[i] = g.normal.cross(rwg_value(g, i, l.sign[i], x));
      break;
  }
}

}  // namespace

RealMatrix mass_matrix(const FunctionSpace& test, const FunctionSpace& trial, int order) {
  if (&test.mesh() != &trial.mesh()) throw std::invalid_argument("mass matrix across different meshes");
  if (is_vector(test.kind()) != is_vector(trial.kind())) {
    throw std::invalid_argument("mass matrix between scalar and vector spaces");
  }
  const bool vec = is_vector(test.kind());
  const Mesh& mesh = test.mesh();
  const TriangleRule rule = gauss_triangle(order);
  RealMatrix m = RealMatrix::Zero(test.dof_count(), trial.dof_count());
  LocalValues a, b;
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const PanelGeometry& g = mesh.geometry()[p];
    const LocalDofs& lt = test.local(p);
    const LocalDofs& ls = trial.local(p);
    for (std::size_t q = 0; q < rule.weights.size(); ++q) {
      const auto& pt = rule.points[q];
      const std::array<double, 3> lambda{1.0 - pt[0] - pt[1], pt[0], pt[1]};
      const Vec3 x = g.point(pt[0], pt[1]);
      const double w = 2.0 * g.area * rule.weights[q];
      local_values(test, p, g, lambda, x, a);
      local_values(trial, p, g, lambda, x, b);
      for (int i = 0; i < lt.count; ++i) {
        for (int j = 0; j < ls.count; ++j) {
          const double v = vec ? a.vector[i].dot(b.vector[j]) : a.scalar[i] * b.scalar[j];
          m(lt.dof[i], ls.dof[j]) += w * v;
        }
      }
    }
  }
  return m;
}

CoeffVector project_p0(const SpacePtr& space, const ScalarTrace& f, int order) {
  if (space->kind() != SpaceKind::P0) throw std::invalid_argument("project_p0 needs a P0 space");
  const Mesh& mesh = space->mesh();
  const TriangleRule rule = gauss_triangle(order);
  CoeffVector c{ComplexVector::Zero(space->dof_count()), space};
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const PanelGeometry& g = mesh.geometry()[p];
    const cplx integral = integrate_panel(rule, g, [&](const Vec3& x) { return f(x, g.normal); });
    c.values(p) = integral / g.area;
  }
  return c;
}

CoeffVector interpolate_p1(const SpacePtr& space, const ScalarTrace& f) {
  if (space->kind() != SpaceKind::P1) throw std::invalid_argument("interpolate_p1 needs a P1 space");
  const Mesh& mesh = space->mesh();
  std::vector<Vec3> normals(mesh.vertex_count(), Vec3::Zero());
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const PanelGeometry& g = mesh.geometry()[p];
    for (int v : mesh.panels()[p]) normals[v] += g.area * g.normal;
  }
  CoeffVector c{ComplexVector::Zero(space->dof_count()), space};
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    c.values(v) = f(mesh.vertices()[v], normals[v].normalized());
  }
  return c;
}

CoeffVector project_rwg(const SpacePtr& space, const VectorTrace& f, int order) {
  if (!is_vector(space->kind())) throw std::invalid_argument("project_rwg needs an RWG or SNC space");
  const Mesh& mesh = space->mesh();
  const TriangleRule rule = gauss_triangle(order);
  ComplexVector rhs = ComplexVector::Zero(space->dof_count());
  LocalValues vals;
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const PanelGeometry& g = mesh.geometry()[p];
    const LocalDofs& l = space->local(p);
    for (std::size_t q = 0; q < rule.weights.size(); ++q) {
      const auto& pt = rule.points[q];
      const Vec3 x = g.point(pt[0], pt[1]);
      const double w = 2.0 * g.area * rule.weights[q];
      local_values(*space, p, g, {1.0 - pt[0] - pt[1], pt[0], pt[1]}, x, vals);
      const CVec3 fx = f(x, g.normal);
      for (int i = 0; i < 3; ++i) {
        rhs(l.dof[i]) += w * (fx(0) * vals.vector[i](0) + fx(1) * vals.vector[i](1) + fx(2) * vals.vector[i](2));
      }
    }
  }
  const RealMatrix gram = mass_matrix(*space, *space, 4);
  Eigen::LLT<RealMatrix> llt(gram);
  if (llt.info() != Eigen::Success) throw std::runtime_error("Gram matrix is not positive definite");
  return {llt.solve(rhs.real()).cast<cplx>() + cplx(0, 1) * llt.solve(rhs.imag()).cast<cplx>(), space};
}

CoeffVector interpolate_rwg(const SpacePtr& space, const VectorTrace& f, int points) {
  if (space->kind() != SpaceKind::RWG) throw std::invalid_argument("interpolate_rwg needs an RWG space");
  const Mesh& mesh = space->mesh();
  const LineRule line = gauss_legendre(points);
  CoeffVector c{ComplexVector::Zero(space->dof_count()), space};
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const PanelGeometry& g = mesh.geometry()[p];
    const LocalDofs& l = space->local(p);
    for (int i = 0; i < 3; ++i) {
      const Vec3& a = g.v[(i + 1) % 3];
      const Vec3& b = g.v[(i + 2) % 3];
      // in-plane unit normal of the edge, pointing away from the opposite vertex
      Vec3 nu = (b - a).cross(g.normal).normalized();
      if (nu.dot(a - g.v[i]) < 0.0) nu = -nu;
      cplx flux = 0.0;
      for (std::size_t q = 0; q < line.points.size(); ++q) {
        const CVec3 fx = f(a + line.points[q] * (b - a), g.normal);
        flux += line.weights[q] * (fx(0) * nu(0) + fx(1) * nu(1) + fx(2) * nu(2));
      }
      // each edge is visited from both adjacent panels
      c.values(l.dof[i]) += 0.5 * l.sign[i] * flux;
    }
  }
  return c;
}

cplx evaluate_scalar(const CoeffVector& c, std::size_t panel, const std::array<double, 3>& lambda) {
  const LocalDofs& l = c.space->local(panel);
  switch (c.space->kind()) {
    case SpaceKind::P0: return c.values(l.dof[0]);
    case SpaceKind::P1:
      return lambda[0] * c.values(l.dof[0]) + lambda[1] * c.values(l.dof[1]) +
             lambda[2] * c.values(l.dof[2]);
    default: throw std::invalid_argument("evaluate_scalar on a vector space");
  }
}

CVec3 evaluate_vector(const CoeffVector& c, std::size_t panel, const Vec3& x) {
  if (!is_vector(c.space->kind())) throw std::invalid_argument("evaluate_vector on a scalar space");
  const PanelGeometry& g = c.space->mesh().geometry()[panel];
  const LocalDofs& l = c.space->local(panel);
  LocalValues vals;
  local_values(*c.space, panel, g, {}, x, vals);
  CVec3 out = CVec3::Zero();
  for (int i = 0; i < 3; ++i) out += c.values(l.dof[i]) * vals.vector[i].cast<cplx>();
  return out;
}

}  // namespace calderon
