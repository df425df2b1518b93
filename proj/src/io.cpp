#include "calderon/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace calderon {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_off(std::ostream& os, const Mesh& mesh) {
  os << "OFF\n" << mesh.vertex_count() << ' ' << mesh.panel_count() << " 0\n";
  for (const Vec3& v : mesh.vertices()) {
    os << format_double(v(0)) << ' ' << format_double(v(1)) << ' ' << format_double(v(2)) << '\n';
  }
  for (const auto& p : mesh.panels()) os << "3 " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
}

void write_off(const std::string& path, const Mesh& mesh) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  write_off(f, mesh);
}

Mesh read_off(std::istream& is, Domain domain, int level) {
  std::string magic;
  is >> magic;
  if (magic != "OFF") throw std::runtime_error("not an OFF file");
  std::size_t nv = 0, nf = 0, ne = 0;
  if (!(is >> nv >> nf >> ne)) throw std::runtime_error("bad OFF header");
  std::vector<Vec3> v(nv);
  for (auto& p : v) {
    if (!(is >> p(0) >> p(1) >> p(2))) throw std::runtime_error("truncated OFF vertices");
  }
  std::vector<std::array<int, 3>> panels(nf);
  for (auto& t : panels) {
    int k = 0;
    if (!(is >> k >> t[0] >> t[1] >> t[2]) || k != 3) throw std::runtime_error("OFF faces must be triangles");
  }
  return Mesh(std::move(v), std::move(panels), domain, level);
}

Mesh read_off(const std::string& path, Domain domain, int level) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_off(f, domain, level);
}

void write_matrix_csv(std::ostream& os, const RealMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_double(m(i, j));
    }
    os << '\n';
  }
}

void write_matrix_csv(std::ostream& os, const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    os << '\n';
  }
}

}  // namespace calderon
