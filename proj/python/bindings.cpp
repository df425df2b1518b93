#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "calderon/experiment.hpp"
#include "calderon/faults.hpp"
#include "calderon/laplace.hpp"
#include "calderon/maxwell.hpp"
#include "calderon/rates.hpp"
#include "calderon/solutions.hpp"

namespace py = pybind11;
using namespace calderon;

namespace {

using Panels = Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor>;
using Points = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

std::shared_ptr<const Mesh> mesh_from(const Points& v, const Panels& p, Domain d) {
  std::vector<Vec3> verts(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) verts[i] = v.row(i).transpose();
  std::vector<std::array<int, 3>> panels(p.rows());
  for (Eigen::Index i = 0; i < p.rows(); ++i) panels[i] = {p(i, 0), p(i, 1), p(i, 2)};
  return std::make_shared<const Mesh>(std::move(verts), std::move(panels), d, 0);
}

py::tuple as_arrays(const Mesh& m) {
  Points v(m.vertex_count(), 3);
  for (std::size_t i = 0; i < m.vertex_count(); ++i) v.row(i) = m.vertices()[i].transpose();
  Panels p(m.panel_count(), 3);
  for (std::size_t i = 0; i < m.panel_count(); ++i) {
    for (int j = 0; j < 3; ++j) p(i, j) = m.panels()[i][j];
  }
  return py::make_tuple(v, p);
}

Domain parse_domain(const std::string& s) {
  if (s == "sphere") return Domain::Sphere;
  if (s == "cube") return Domain::Cube;
  throw std::invalid_argument("domain must be 'sphere' or 'cube'");
}

ExperimentConfig config_from(const std::map<std::string, std::string>& kv) {
  ExperimentConfig c;
  for (const auto& [k, v] : kv) c.set(k, v);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Galerkin BEM operators, Calderon residual studies and fault injection";

  m.def("sphere_mesh", [](int level) { return as_arrays(make_sphere_mesh(level)); }, py::arg("level"),
        "Octahedron-refined unit sphere as (vertices, panels).");
  m.def(
      "cube_mesh",
      [](int divisions, const std::string& split) {
        return as_arrays(make_cube_mesh(divisions, split == "centre" ? CubeSplit::Centre : CubeSplit::Diagonal));
      },
      py::arg("divisions"), py::arg("split") = "diagonal", "Unit cube surface as (vertices, panels).");
  m.def(
      "meshwidth",
      [](const Points& v, const Panels& p) { return meshwidth(*mesh_from(v, p, Domain::Cube)); },
      py::arg("vertices"), py::arg("panels"));

  m.def(
      "assemble_laplace",
      [](const Points& v, const Panels& p, const std::string& domain, int regular, int singular) {
        const LaplaceOperators ops = assemble_laplace(mesh_from(v, p, parse_domain(domain)), {regular, singular});
        py::dict d;
        d["V"] = ops.V.data;
        d["K"] = ops.K.data;
        d["Kp"] = ops.Kp.data;
        d["W"] = ops.W.data;
        d["Wm"] = ops.Wm.data;
        d["Wtilde"] = ops.Wtilde.data;
        d["M01"] = ops.M01;
        d["M10"] = ops.M10;
        return d;
      },
      py::arg("vertices"), py::arg("panels"), py::arg("domain") = "cube", py::arg("quad_regular") = 4,
      py::arg("quad_singular") = 4, "Laplace Galerkin matrices as a dict of numpy arrays.");
  m.def(
      "assemble_maxwell",
      [](const Points& v, const Panels& p, cplx k, int regular, int singular) {
        const MaxwellOperators ops = assemble_maxwell(mesh_from(v, p, Domain::Cube), k, {regular, singular});
        py::dict d;
        d["E"] = ops.E.data;
        d["H"] = ops.H.data;
        d["M"] = ops.M.data;
        return d;
      },
      py::arg("vertices"), py::arg("panels"), py::arg("k"), py::arg("quad_regular") = 4,
      py::arg("quad_singular") = 4, "EFIE, MFIE and SNC x RWG mass matrices.");

  m.def("fit_rate", &fit_rate, py::arg("h"), py::arg("values"));
  m.def("consecutive_rates", &consecutive_rates, py::arg("h"), py::arg("values"));
  m.def(
      "classify",
      [](const std::vector<double>& h, const std::vector<double>& values, double expected, double floor,
         bool consecutive_only) {
        ClassifyOptions o;
        o.machine_floor = floor;
        const RateVerdict r = consecutive_only ? classify_consecutive(h, values, expected, o)
                                               : classify(h, values, expected, o);
        return std::string(to_string(r.verdict));
      },
      py::arg("h"), py::arg("values"), py::arg("expected"), py::arg("machine_floor") = 0.0,
      py::arg("consecutive_only") = false, "Verdict name: pass, fail, machine-precision, fluctuating, ...");
  m.def(
      "apply_fault",
      [](const RealMatrix& a, const std::string& kind, std::uint64_t seed, double h) {
        return apply_fault(a, FaultSpec{parse_fault(kind), seed, h});
      },
      py::arg("matrix"), py::arg("kind"), py::arg("seed") = 0, py::arg("h") = 0.0);
  m.def("solution_names", &solution_names);

  m.def(
      "run",
      [](const std::string& command, const std::map<std::string, std::string>& options) {
        const ExperimentConfig c = config_from(options);
        Report r;
        if (command == "basis-norms") r = basis_norms_report(c);
        else if (command == "residuals") r = residuals_report(c);
        else if (command == "inject") r = inject_report(c);
        else if (command == "spectrum") r = spectrum_report(c);
        else if (command == "report") r = summary_report(c);
        else throw std::invalid_argument("unknown command '" + command + "'");
        std::ostringstream os;
        write_csv(os, r, c);
        return py::make_tuple(os.str(), r.has_fail);
      },
      py::arg("command"), py::arg("options") = std::map<std::string, std::string>{},
      "Runs an experiment command; returns (csv text, has_fail). Options use config-file keys.");
}
