#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "calderon/faults.hpp"
#include "calderon/mesh.hpp"
#include "calderon/quadrature.hpp"
#include "calderon/rates.hpp"
#include "calderon/residuals.hpp"

namespace calderon {

enum class Target { V, W, E };
const char* to_string(Target t);
Target parse_target(const std::string& s);

/// How e_R turns the complex bilinear form into a number: modulus of the
/// real-k form, or the k = i EFIE matrix (real, SPD).
enum class EnergyNorm { Modulus, ImaginaryK };

struct ExperimentConfig {
  std::string solution = "2";
  std::vector<int> levels;  // empty: default_levels() of the solution's domain
  FaultKind fault = FaultKind::None;
  Target target = Target::V;
  std::uint64_t seed = 0;
  QuadratureOptions quad;
  int trace_order = 6;
  RwgTraceMap rwg_trace = RwgTraceMap::Interpolant;
  CubeSplit cube_split = CubeSplit::Diagonal;
  EnergyNorm er_norm = EnergyNorm::Modulus;
  double tol = 1e-10;
  double fluctuation_band = 3.0;
  std::optional<double> machine_floor;  // default 1e-6 * max trace coefficient
  cplx wavenumber = cplx(0.0, 1.0);     // basis-norms EFIE only
  bool full = false;

  // outputs, not part of the hash
  std::string csv, md, mesh_out, dump_tag, dump_path;

  /// Sets one key from its text form. Throws std::invalid_argument on
  /// unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  /// Sorted key=value lines of everything that affects results.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), 16 hex digits.
  std::string hash() const;
};

/// key = value lines, '#' starts a comment. Keys as in ExperimentConfig::set.
void load_config(std::istream& is, ExperimentConfig& cfg);
void load_config(const std::string& path, ExperimentConfig& cfg);

std::vector<int> default_levels(Domain d);
/// Checks levels (strictly increasing, >= 0, at least `min_count`, desk caps
/// unless cfg.full) and fills in defaults.
std::vector<int> resolve_levels(const ExperimentConfig& cfg, Domain d, std::size_t min_count = 2);
/// Sphere: octahedron refined `level` times. Cube: 2^level divisions.
std::shared_ptr<const Mesh> make_level_mesh(Domain d, int level, CubeSplit split = CubeSplit::Diagonal);

/// Plain table of formatted cells.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::vector<Table> tables;
  bool has_fail = false;  // any Fail, Fluctuating or SolverFailure verdict
};

void write_csv(std::ostream& os, const Report& r, const ExperimentConfig& cfg);
void write_markdown(std::ostream& os, const Report& r, const ExperimentConfig& cfg);

/// One convergence series of a study.
struct Series {
  std::string name;
  std::vector<double> values;  // NaN marks a failed solve
  double expected = 0.0;
  bool consecutive_only = false;  // MMS errors are judged by the last consecutive rate
  RateVerdict verdict;
};

struct Study {
  std::string title;
  std::vector<int> levels;
  std::vector<std::size_t> elements;
  std::vector<double> h;
  std::vector<Series> series;
};

Table study_table(const Study& s);

/// Max diagonal entries of V and W (Laplace solutions) or of E at
/// cfg.wavenumber (Maxwell solutions). A single level is allowed.
Study run_basis_norms(const ExperimentConfig& cfg);
/// Clean residual norms and MMS errors.
Study run_residuals(const ExperimentConfig& cfg);

struct InjectResult {
  Study study;
  Verdict calderon = Verdict::Fail;
  Verdict mms = Verdict::Fail;
  bool agree = false;
};
/// Residuals and MMS error with cfg.fault injected into cfg.target.
InjectResult run_inject(const ExperimentConfig& cfg);

struct SpectrumResult {
  int level = 0;
  std::size_t elements = 0;
  RealVector clean, faulted;  // ascending
  bool cg_clean = false, cg_faulted = false;
  int it_clean = 0, it_faulted = 0;
};
/// Eigenvalues of V or Wm on the first level, clean and faulted, and
/// whether CG converges on the MMS system with each.
SpectrumResult run_spectrum(const ExperimentConfig& cfg);

struct SummaryRow {
  std::string solution;
  Target target;
  FaultKind fault;
  Verdict calderon, mms;
  bool agree;
};
/// Faults A-E on V and W for 1a and 2 and on E for m3. Clean operators are
/// assembled once per solution and level.
std::vector<SummaryRow> run_report(const ExperimentConfig& cfg);

/// Pass unless some verdict fails; SolverFailure before Fail before
/// Fluctuating. All MachinePrecision gives MachinePrecision.
Verdict combine(const std::vector<Verdict>& vs);
bool agree(Verdict calderon, Verdict mms);

Report basis_norms_report(const ExperimentConfig& cfg);
Report residuals_report(const ExperimentConfig& cfg);
Report inject_report(const ExperimentConfig& cfg);
Report spectrum_report(const ExperimentConfig& cfg);
Report summary_report(const ExperimentConfig& cfg);

}  // namespace calderon
