#pragma once

#include <array>
#include <string>
#include <vector>

#include "calderon/types.hpp"

namespace calderon {

enum class Domain { Sphere, Cube };
enum class MeshwidthKind { Max, Average };

const char* to_string(Domain d);

/// Flat triangle with cached geometric data. Vertices are stored in the
/// panel's (outward, counter-clockwise) orientation.
struct PanelGeometry {
  std::array<Vec3, 3> v;
  Vec3 normal;
  double area = 0.0;
  double diameter = 0.0;

  /// Point with barycentric coordinates (1 - a1 - a2, a1, a2).
  Vec3 point(double a1, double a2) const {
    return v[0] + a1 * (v[1] - v[0]) + a2 * (v[2] - v[0]);
  }
  Vec3 centroid() const { return (v[0] + v[1] + v[2]) / 3.0; }
};

PanelGeometry make_panel_geometry(const Vec3& a, const Vec3& b, const Vec3& c);

/// Closed, consistently oriented triangulated surface.
///
/// Edges are numbered in order of first appearance when sweeping panels and
/// their local edges. Local edge i of a panel joins local vertices i+1 and
/// i+2 (mod 3), i.e. it is opposite local vertex i. Every edge carries the
/// reference direction lower vertex index -> higher vertex index.
class Mesh {
 public:
  Mesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> panels,
       Domain domain, int level);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& panels() const { return panels_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<PanelGeometry>& geometry() const { return geometry_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t panel_count() const { return panels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Global edge index of local edge i of panel p.
  int panel_edge(std::size_t p, int i) const { return panel_edges_[p][i]; }
  /// +1 if panel p traverses its local edge i along the reference direction.
  int panel_edge_sign(std::size_t p, int i) const {
    return panel_edge_signs_[p][i];
  }
  /// The two panels adjacent to edge e.
  const std::array<int, 2>& edge_panels(std::size_t e) const {
    return edge_panels_[e];
  }

  Domain domain() const { return domain_; }
  int level() const { return level_; }

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> panels_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> panel_edges_;
  std::vector<std::array<int, 3>> panel_edge_signs_;
  std::vector<std::array<int, 2>> edge_panels_;
  std::vector<PanelGeometry> geometry_;
  Domain domain_;
  int level_;
};

/// Unit sphere: octahedron refined `level` times, new vertices projected
/// onto the sphere. Has 8 * 4^level panels.
Mesh make_sphere_mesh(int level);

enum class CubeSplit { Diagonal, Centre };

/// Surface of [0,1]^3 with `divisions` squares per cube edge. Diagonal splits
/// each square into two triangles (12 * divisions^2 panels), Centre into four
/// around the square's midpoint (24 * divisions^2 panels).
Mesh make_cube_mesh(int divisions, CubeSplit split = CubeSplit::Diagonal);

/// Uniform red refinement: every panel is split into four through its edge
/// midpoints. Sphere meshes have their new vertices projected back.
Mesh refine(const Mesh& mesh);

double meshwidth(const Mesh& mesh, MeshwidthKind kind = MeshwidthKind::Max);

/// Enclosed volume from the divergence theorem. Positive for outward
/// orientation.
double enclosed_volume(const Mesh& mesh);
double surface_area(const Mesh& mesh);

}  // namespace calderon
