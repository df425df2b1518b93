#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "calderon/experiment.hpp"

using namespace calderon;

namespace {

// Option values are kept as text and applied through ExperimentConfig::set
// after the config file, so command line flags win.
struct Flags {
  std::map<std::string, std::string> values;
  std::vector<std::string> wavenumber, dump;
  bool degraded = false, full = false;
};

void add_common(CLI::App* sub, Flags& f) {
  auto opt = [&](const std::string& name, const std::string& key, const std::string& help) {
    sub->add_option(name, f.values[key], help);
  };
  opt("--config", "config", "key = value file applied before the other flags");
  opt("--solution", "solution", "1a | 1b | 2 | m3 | m4");
  opt("--levels", "levels", "refinement levels, e.g. 2,3,4");
  opt("--fault", "fault", "none | A | B | C | D | E");
  opt("--target", "target", "V | W | E");
  opt("--seed", "seed", "seed of fault A");
  opt("--quad-regular", "quad_regular", "Gauss points per direction for regular pairs (4)");
  opt("--quad-singular", "quad_singular", "points per coordinate for singular pairs (4)");
  sub->add_flag("--quad-degraded", f.degraded, "regular 2, singular 1");
  opt("--trace-order", "trace_order", "quadrature order of the trace projections (6)");
  opt("--rwg-trace", "rwg_trace", "interp | l2");
  opt("--cube-split", "cube_split", "diagonal | centre");
  opt("--er-norm", "er_norm", "modulus | imag-k");
  opt("--tol", "tol", "relative solver tolerance (1e-10)");
  opt("--machine-floor", "machine_floor", "absolute floor or auto");
  opt("--fluctuation-band", "fluctuation_band", "max jump between consecutive rates (3)");
  sub->add_option("--wavenumber", f.wavenumber, "EFIE wavenumber for basis-norms: re im")->expected(2);
  sub->add_flag("--full", f.full, "lift the desk-scale level caps");
  opt("--csv", "csv", "write CSV here (- for stdout)");
  opt("--md", "md", "write markdown here (- for stdout)");
  opt("--mesh-out", "mesh_out", "write the finest mesh as OFF");
  sub->add_option("--dump-matrix", f.dump, "dump a matrix of the finest level: <tag> <path>")->expected(2);
}

ExperimentConfig build_config(const Flags& f) {
  ExperimentConfig cfg;
  if (auto it = f.values.find("config"); it != f.values.end() && !it->second.empty()) {
    load_config(it->second, cfg);
  }
  for (const auto& [key, value] : f.values) {
    if (key != "config" && !value.empty()) cfg.set(key, value);
  }
  if (f.degraded) cfg.set("quad_degraded", "true");
  if (f.full) cfg.full = true;
  if (!f.wavenumber.empty()) cfg.set("wavenumber", f.wavenumber[0] + " " + f.wavenumber[1]);
  if (!f.dump.empty()) cfg.set("dump_matrix", f.dump[0] + " " + f.dump[1]);
  return cfg;
}

void emit(const Report& r, const ExperimentConfig& cfg) {
  auto to = [&](const std::string& path, auto writer) {
    if (path == "-") {
      writer(std::cout);
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    writer(f);
  };
  if (!cfg.csv.empty()) to(cfg.csv, [&](std::ostream& os) { write_csv(os, r, cfg); });
  if (!cfg.md.empty()) to(cfg.md, [&](std::ostream& os) { write_markdown(os, r, cfg); });
  if (cfg.csv != "-" && cfg.md != "-") write_markdown(std::cout, r, cfg);
}

void set_threads() {
#ifdef _OPENMP
  if (const char* t = std::getenv("CALDERON_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calderon residual and fault-injection experiments for Laplace and Maxwell BEM"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"basis-norms", "max diagonal entries of V, W or E at k = i"},
      {"residuals", "clean Calderon residual and MMS rates"},
      {"inject", "Calderon vs MMS verdicts with a fault in V, W or E"},
      {"spectrum", "eigenvalues of clean and faulted V or Wm"},
      {"report", "fault grid summary over 1a, 2 and m3"}};
  std::map<std::string, Flags> flags;
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), flags[name]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  set_threads();
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const ExperimentConfig cfg = build_config(flags[name]);
    Report r;
    if (name == "basis-norms") r = basis_norms_report(cfg);
    else if (name == "residuals") r = residuals_report(cfg);
    else if (name == "inject") r = inject_report(cfg);
    else if (name == "spectrum") r = spectrum_report(cfg);
    else r = summary_report(cfg);
    emit(r, cfg);
    return r.has_fail ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "calderon: " << e.what() << "\n";
    return 2;
  }
}
