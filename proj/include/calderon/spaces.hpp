#pragma once

#include <array>
#include <functional>
#include <memory>

#include "calderon/mesh.hpp"
#include "calderon/quadrature.hpp"
#include "calderon/types.hpp"

namespace calderon {

enum class SpaceKind { P0, P1, RWG, SNC };

const char* to_string(SpaceKind k);

/// Degrees of freedom touching one panel. For P0 only slot 0 is used; for
/// P1 slot i belongs to local vertex i; for RWG/SNC slot i belongs to local
/// edge i (opposite local vertex i) and `sign` is the edge orientation.
struct LocalDofs {
  std::array<int, 3> dof{-1, -1, -1};
  std::array<int, 3> sign{1, 1, 1};
  int count = 0;
};

class FunctionSpace {
 public:
  FunctionSpace(std::shared_ptr<const Mesh> mesh, SpaceKind kind);

  SpaceKind kind() const { return kind_; }
  const Mesh& mesh() const { return *mesh_; }
  std::shared_ptr<const Mesh> mesh_ptr() const { return mesh_; }
  std::size_t dof_count() const { return dofs_; }
  const LocalDofs& local(std::size_t panel) const { return local_[panel]; }

 private:
  std::shared_ptr<const Mesh> mesh_;
  SpaceKind kind_;
  std::size_t dofs_ = 0;
  std::vector<LocalDofs> local_;
};

using SpacePtr = std::shared_ptr<const FunctionSpace>;
SpacePtr make_space(std::shared_ptr<const Mesh> mesh, SpaceKind kind);

/// Coefficients of a discrete function together with its space.
struct CoeffVector {
  ComplexVector values;
  SpacePtr space;
};

// Local basis functions on a panel. `slot` is the local vertex (P1) or
// local edge (RWG, SNC).

/// Surface curl of the P1 hat of local vertex `slot`; constant per panel.
Vec3 p1_surface_curl(const PanelGeometry& g, int slot);
/// RWG function of local edge `slot` with orientation `sign`, at x.
Vec3 rwg_value(const PanelGeometry& g, int slot, int sign, const Vec3& x);
/// Surface divergence of the same RWG function.
double rwg_divergence(const PanelGeometry& g, int slot, int sign);
double edge_length(const PanelGeometry& g, int slot);

/// Galerkin mass matrix (test x trial) of the identity.
RealMatrix mass_matrix(const FunctionSpace& test, const FunctionSpace& trial,
                       int order = 4);

using ScalarTrace = std::function<cplx(const Vec3& x, const Vec3& n)>;
using VectorTrace = std::function<CVec3(const Vec3& x, const Vec3& n)>;

/// L2 projection onto piecewise constants.
CoeffVector project_p0(const SpacePtr& space, const ScalarTrace& f, int order = 6);
/// Nodal interpolation onto P1 hats. The normal passed to f is the
/// area-weighted average of the adjacent panel normals.
CoeffVector interpolate_p1(const SpacePtr& space, const ScalarTrace& f);
/// L2 projection onto RWG (or SNC) functions via the Gram matrix.
CoeffVector project_rwg(const SpacePtr& space, const VectorTrace& f, int order = 6);

/// RWG interpolant: the coefficient of edge e is the mean normal component
/// of f across e, so the surface divergence of the result is the P0
/// projection of div f.
CoeffVector interpolate_rwg(const SpacePtr& space, const VectorTrace& f, int points = 6);
/// Evaluate a discrete scalar (P0, P1) function at barycentric point of a panel.
cplx evaluate_scalar(const CoeffVector& c, std::size_t panel, const std::array<double, 3>& lambda);
/// Evaluate a discrete RWG/SNC field at x on a panel.
CVec3 evaluate_vector(const CoeffVector& c, std::size_t panel, const Vec3& x);

}  // namespace calderon
