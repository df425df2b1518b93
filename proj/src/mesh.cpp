#include "calderon/mesh.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace calderon {

const char* to_string(Domain d) {
  return d == Domain::Sphere ? "sphere" : "cube";
}

PanelGeometry make_panel_geometry(const Vec3& a, const Vec3& b, const Vec3& c) {
  PanelGeometry g;
  g.v = {a, b, c};
  const Vec3 cr = (b - a).cross(c - a);
  const double twice_area = cr.norm();
  if (!(twice_area > 0.0)) throw std::invalid_argument("degenerate panel");
  g.area = 0.5 * twice_area;
  g.normal = cr / twice_area;
  g.diameter = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
  return g;
}

Mesh::Mesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> panels,
           Domain domain, int level)
    : vertices_(std::move(vertices)),
      panels_(std::move(panels)),
      domain_(domain),
      level_(level) {
  const int nv = static_cast<int>(vertices_.size());
  std::map<std::pair<int, int>, int> edge_index;
  panel_edges_.resize(panels_.size());
  panel_edge_signs_.resize(panels_.size());
  geometry_.reserve(panels_.size());

  for (std::size_t p = 0; p < panels_.size(); ++p) {
    const auto& t = panels_[p];
    for (int i = 0; i < 3; ++i) {
      if (t[i] < 0 || t[i] >= nv) throw std::invalid_argument("panel references missing vertex");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw std::invalid_argument("panel with repeated vertex");
    }
    geometry_.push_back(make_panel_geometry(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]));

    for (int i = 0; i < 3; ++i) {
      const int a = t[(i + 1) % 3];
      const int b = t[(i + 2) % 3];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edge_index.try_emplace({key.first, key.second},
                                                   static_cast<int>(edges_.size()));
      if (inserted) {
        edges_.push_back({key.first, key.second});
        edge_panels_.push_back({static_cast<int>(p), -1});
      } else {
        auto& adj = edge_panels_[it->second];
        if (adj[1] != -1) throw std::invalid_argument("non-manifold edge");
        adj[1] = static_cast<int>(p);
      }
      panel_edges_[p][i] = it->second;
      panel_edge_signs_[p][i] = a < b ? 1 : -1;
    }
  }

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& adj = edge_panels_[e];
    if (adj[1] == -1) throw std::invalid_argument("open surface: boundary edge");
    int s0 = 0, s1 = 0;
    for (int i = 0; i < 3; ++i) {
      if (panel_edges_[adj[0]][i] == static_cast<int>(e)) s0 = panel_edge_signs_[adj[0]][i];
      if (panel_edges_[adj[1]][i] == static_cast<int>(e)) s1 = panel_edge_signs_[adj[1]][i];
    }
    if (s0 == s1) throw std::invalid_argument("inconsistent panel orientation");
  }
}

Mesh make_sphere_mesh(int level) {
  if (level < 0) throw std::invalid_argument("sphere level must be >= 0");
  std::vector<Vec3> v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                         {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  // +x=0 -x=1 +y=2 -y=3 +z=4 -z=5
  std::vector<std::array<int, 3>> p = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                       {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  Mesh mesh(std::move(v), std::move(p), Domain::Sphere, 0);
  for (int l = 0; l < level; ++l) mesh = refine(mesh);
  return mesh;
}

Mesh make_cube_mesh(int divisions, CubeSplit split) {
  if (divisions < 1) throw std::invalid_argument("cube divisions must be >= 1");
  const int n = divisions;
  std::map<std::array<int, 3>, int> index;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> panels;
  auto vid = [&](const std::array<int, 3>& g) {
    auto [it, inserted] = index.try_emplace(g, static_cast<int>(vertices.size()));
    // grid coordinates are in units of 1 / (2n) so face centres are integral
    if (inserted) vertices.emplace_back(0.5 * g[0] / n, 0.5 * g[1] / n, 0.5 * g[2] / n);
    return it->second;
  };

  // Each face: fixed axis and value, in-plane axes (u, w) with u x w outward.
  struct Face { int axis, value, u, w; };
  const Face faces[6] = {{0, 0, 2, 1}, {0, n, 1, 2}, {1, 0, 0, 2},
                         {1, n, 2, 0}, {2, 0, 1, 0}, {2, n, 0, 1}};
  for (const Face& f : faces) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto point = [&](int du, int dw) {
          std::array<int, 3> g{};
          g[f.axis] = 2 * f.value;
          g[f.u] = 2 * i + du;
          g[f.w] = 2 * j + dw;
          return vid(g);
        };
        const int p00 = point(0, 0), p10 = point(2, 0), p11 = point(2, 2), p01 = point(0, 2);
        if (split == CubeSplit::Diagonal) {
          panels.push_back({p00, p10, p11});
          panels.push_back({p00, p11, p01});
        } else {
          const int c = point(1, 1);
          panels.push_back({p00, p10, c});
          panels.push_back({p10, p11, c});
          panels.push_back({p11, p01, c});
          panels.push_back({p01, p00, c});
        }
      }
    }
  }
  int level = 0;
  while ((1 << (level + 1)) <= n) ++level;
  return Mesh(std::move(vertices), std::move(panels), Domain::Cube, level);
}

Mesh refine(const Mesh& mesh) {
  std::vector<Vec3> vertices = mesh.vertices();
  const int nv = static_cast<int>(vertices.size());
  for (const auto& e : mesh.edges()) {
    Vec3 m = 0.5 * (vertices[e[0]] + vertices[e[1]]);
    if (mesh.domain() == Domain::Sphere) m.normalize();
    vertices.push_back(m);
  }
  std::vector<std::array<int, 3>> panels;
  panels.reserve(4 * mesh.panel_count());
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    const auto& t = mesh.panels()[p];
    // midpoint opposite local vertex i
    const int m0 = nv + mesh.panel_edge(p, 0);
    const int m1 = nv + mesh.panel_edge(p, 1);
    const int m2 = nv + mesh.panel_edge(p, 2);
    panels.push_back({t[0], m2, m1});
    panels.push_back({m2, t[1], m0});
    panels.push_back({m1, m0, t[2]});
    panels.push_back({m2, m0, m1});
  }
  return Mesh(std::move(vertices), std::move(panels), mesh.domain(), mesh.level() + 1);
}

double meshwidth(const Mesh& mesh, MeshwidthKind kind) {
  double mx = 0.0, sum = 0.0;
  for (const auto& g : mesh.geometry()) {
    mx = std::max(mx, g.diameter);
    sum += g.diameter;
  }
  return kind == MeshwidthKind::Max ? mx : sum / static_cast<double>(mesh.panel_count());
}

double enclosed_volume(const Mesh& mesh) {
  double vol = 0.0;
  for (const auto& g : mesh.geometry()) vol += g.area * g.centroid().dot(g.normal);
  return vol / 3.0;
}

double surface_area(const Mesh& mesh) {
  double a = 0.0;
  for (const auto& g : mesh.geometry()) a += g.area;
  return a;
}

}  // namespace calderon
