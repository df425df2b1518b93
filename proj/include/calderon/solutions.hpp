#pragma once

#include <functional>
#include <string>
#include <vector>

#include "calderon/mesh.hpp"
#include "calderon/spaces.hpp"
#include "calderon/types.hpp"

namespace calderon {

enum class Side { Interior, Exterior };
enum class Physics { Laplace, Maxwell };

const char* to_string(Side s);

/// Closed-form test solution with its boundary traces. Laplace solutions
/// provide dirichlet/neumann, Maxwell solutions tangential/magnetic.
struct ManufacturedSolution {
  std::string name;
  Physics physics = Physics::Laplace;
  Side side = Side::Interior;
  Domain domain = Domain::Sphere;
  cplx wavenumber = 0.0;
  ScalarTrace dirichlet;
  ScalarTrace neumann;
  VectorTrace tangential;  // gamma_x u = u x n
  VectorTrace magnetic;    // gamma_R u = (curl u) x n
  std::function<cplx(const Vec3&)> field;       // Laplace volume function
  std::function<CVec3(const Vec3&)> vector_field;  // Maxwell volume field
  std::function<CVec3(const Vec3&)> curl_field;
};

/// "1a": exterior, r^-2 e^{i phi} P_1^1(cos theta) on the unit sphere.
ManufacturedSolution example_1a();
/// "1b": interior, r e^{i phi} P_1^1(cos theta) on the unit sphere.
ManufacturedSolution example_1b();
/// "2": interior, x^2 - y^2/2 - z^2/2 on the unit cube.
ManufacturedSolution example_2();
/// "m3": plane wave (1,0,0) e^{iz}, k = 1, on the unit cube.
ManufacturedSolution example_m3();
/// "m4": plane wave d x (p x d) e^{i k x.d}, p = (1.01, 0, 1.05),
/// d = (1,1,1)/sqrt(3), k = 2, on the unit cube.
ManufacturedSolution example_m4();

/// Lookup by name: 1a, 1b, 2, m3, m4.
ManufacturedSolution solution_by_name(const std::string& name);
std::vector<std::string> solution_names();

/// Associated Legendre P_1^1(x) = -(1 - x^2)^{1/2}.
double legendre_p11(double x);

}  // namespace calderon
