#include "calderon/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace calderon {

const char* to_string(Side s) { return s == Side::Interior ? "interior" : "exterior"; }

double legendre_p11(double x) { return -std::sqrt(std::max(0.0, 1.0 - x * x)); }

namespace {

constexpr cplx I(0.0, 1.0);

// Harmonic u = r^m e^{i phi} P_1^1(cos theta) for m in {1, -2}. In Cartesian
// form e^{i phi} P_1^1(cos theta) = -(x + i y) / r. The traces are the closed
// forms on the unit sphere evaluated at the angles of the given point, so
// tau_N = m tau_D regardless of the panel normal.
ManufacturedSolution spherical_harmonic(const std::string& name, int m, Side side) {
  ManufacturedSolution s;
  s.name = name;
  s.physics = Physics::Laplace;
  s.side = side;
  s.domain = Domain::Sphere;
  s.field = [m](const Vec3& x) {
    const double r = x.norm();
    return -std::pow(r, m - 1) * cplx(x(0), x(1));
  };
  s.dirichlet = [](const Vec3& x, const Vec3&) {
    const double r = x.norm();
    const double theta = std::acos(std::clamp(x(2) / r, -1.0, 1.0));
    const double phi = std::atan2(x(1), x(0));
    return std::exp(I * phi) * legendre_p11(std::cos(theta));
  };
  s.neumann = [m, d = s.dirichlet](const Vec3& x, const Vec3& n) { return double(m) * d(x, n); };
  return s;
}

ManufacturedSolution plane_wave(const std::string& name, const Vec3& pol, const Vec3& dir, double k) {
  ManufacturedSolution s;
  s.name = name;
  s.physics = Physics::Maxwell;
  s.side = Side::Interior;
  s.domain = Domain::Cube;
  s.wavenumber = k;
  s.vector_field = [pol, dir, k](const Vec3& x) -> CVec3 {
    return std::exp(I * k * dir.dot(x)) * pol.cast<cplx>();
  };
  const Vec3 dxp = dir.cross(pol);
  s.curl_field = [dxp, dir, k](const Vec3& x) -> CVec3 {
    return (I * k * std::exp(I * k * dir.dot(x))) * dxp.cast<cplx>();
  };
  s.tangential = [u = s.vector_field](const Vec3& x, const Vec3& n) -> CVec3 {
    return u(x).cross(n.cast<cplx>());
  };
  s.magnetic = [c = s.curl_field](const Vec3& x, const Vec3& n) -> CVec3 {
    return c(x).cross(n.cast<cplx>());
  };
  return s;
}

}  // namespace

ManufacturedSolution example_1a() { return spherical_harmonic("1a", -2, Side::Exterior); }
ManufacturedSolution example_1b() { return spherical_harmonic("1b", 1, Side::Interior); }

ManufacturedSolution example_2() {
  ManufacturedSolution s;
  s.name = "2";
  s.physics = Physics::Laplace;
  s.side = Side::Interior;
  s.domain = Domain::Cube;
  s.field = [](const Vec3& x) -> cplx { return x(0) * x(0) - 0.5 * x(1) * x(1) - 0.5 * x(2) * x(2); };
  s.dirichlet = [f = s.field](const Vec3& x, const Vec3&) { return f(x); };
  s.neumann = [](const Vec3& x, const Vec3& n) -> cplx {
    return 2.0 * x(0) * n(0) - x(1) * n(1) - x(2) * n(2);
  };
  return s;
}

ManufacturedSolution example_m3() { return plane_wave("m3", {1, 0, 0}, {0, 0, 1}, 1.0); }

ManufacturedSolution example_m4() {
  const Vec3 p(1.01, 0.0, 1.05);
  const Vec3 d = Vec3(1, 1, 1).normalized();
  return plane_wave("m4", d.cross(p.cross(d)), d, 2.0);
}

std::vector<std::string> solution_names() { return {"1a", "1b", "2", "m3", "m4"}; }

ManufacturedSolution solution_by_name(const std::string& name) {
  if (name == "1a") return example_1a();
  if (name == "1b") return example_1b();
  if (name == "2") return example_2();
  if (name == "m3") return example_m3();
  if (name == "m4") return example_m4();
  throw std::invalid_argument("unknown solution '" + name + "'");
}

}  // namespace calderon
