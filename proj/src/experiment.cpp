#include "calderon/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "calderon/io.hpp"
#include "calderon/laplace.hpp"
#include "calderon/linalg.hpp"
#include "calderon/maxwell.hpp"
#include "calderon/solutions.hpp"

namespace calderon {

const char* to_string(Target t) {
  switch (t) {
    case Target::V: return "V";
    case Target::W: return "W";
    case Target::E: return "E";
  }
  return "?";
}

Target parse_target(const std::string& s) {
  if (s == "V") return Target::V;
  if (s == "W") return Target::W;
  if (s == "E") return Target::E;
  throw std::invalid_argument("unknown target '" + s + "' (V, W, E)");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  int x = 0;
  try {
    x = std::stoi(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument(key + ": not an integer: '" + v + "'");
  return x;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument(key + ": not a number: '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument(key + ": not a boolean: '" + v + "'");
}

const char* to_string(CubeSplit s) { return s == CubeSplit::Diagonal ? "diagonal" : "centre"; }
const char* to_string(EnergyNorm n) { return n == EnergyNorm::Modulus ? "modulus" : "imag-k"; }

std::string join_levels(const std::vector<int>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s;
}

}  // namespace

void ExperimentConfig::set(const std::string& key_in, const std::string& value_in) {
  std::string key = trim(key_in);
  std::replace(key.begin(), key.end(), '-', '_');
  const std::string v = trim(value_in);
  if (key == "solution") {
    solution_by_name(v);  // validates
    solution = v;
  } else if (key == "levels") {
    levels.clear();
    for (const auto& w : split_list(v)) levels.push_back(to_int(key, w));
  } else if (key == "fault") {
    fault = parse_fault(v);
  } else if (key == "target") {
    target = parse_target(v);
  } else if (key == "seed") {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("seed: not a non-negative integer: '" + v + "'");
    }
    seed = std::stoull(v);
  } else if (key == "quad_regular") {
    quad.regular = to_int(key, v);
  } else if (key == "quad_singular") {
    quad.singular = to_int(key, v);
  } else if (key == "quad_degraded") {
    if (to_bool(key, v)) quad = {2, 1};
  } else if (key == "trace_order") {
    trace_order = to_int(key, v);
  } else if (key == "rwg_trace") {
    rwg_trace = parse_rwg_trace_map(v);
  } else if (key == "cube_split") {
    if (v == "diagonal") cube_split = CubeSplit::Diagonal;
    else if (v == "centre" || v == "center") cube_split = CubeSplit::Centre;
    else throw std::invalid_argument("cube_split: expected diagonal or centre, got '" + v + "'");
  } else if (key == "er_norm") {
    if (v == "modulus") er_norm = EnergyNorm::Modulus;
    else if (v == "imag-k" || v == "imag_k") er_norm = EnergyNorm::ImaginaryK;
    else throw std::invalid_argument("er_norm: expected modulus or imag-k, got '" + v + "'");
  } else if (key == "tol") {
    tol = to_double(key, v);
  } else if (key == "fluctuation_band") {
    fluctuation_band = to_double(key, v);
  } else if (key == "machine_floor") {
    if (v == "auto") machine_floor.reset();
    else machine_floor = to_double(key, v);
  } else if (key == "wavenumber") {
    const auto parts = split_list(v);
    if (parts.empty() || parts.size() > 2) throw std::invalid_argument("wavenumber: expected 're im'");
    wavenumber = cplx(to_double(key, parts[0]), parts.size() == 2 ? to_double(key, parts[1]) : 0.0);
  } else if (key == "full") {
    full = to_bool(key, v);
  } else if (key == "csv") {
    csv = v;
  } else if (key == "md") {
    md = v;
  } else if (key == "mesh_out") {
    mesh_out = v;
  } else if (key == "dump_matrix") {
    const auto parts = split_list(v);
    if (parts.size() != 2) throw std::invalid_argument("dump_matrix: expected '<tag> <path>'");
    dump_tag = parts[0];
    dump_path = parts[1];
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
  if (quad.regular < 1 || quad.singular < 1) throw std::invalid_argument("quadrature orders must be >= 1");
  if (trace_order < 1) throw std::invalid_argument("trace_order must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

std::string ExperimentConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["cube_split"] = to_string(cube_split);
  kv["er_norm"] = to_string(er_norm);
  kv["fault"] = to_string(fault);
  kv["fluctuation_band"] = format_double(fluctuation_band);
  kv["full"] = full ? "true" : "false";
  kv["levels"] = join_levels(levels);
  kv["machine_floor"] = machine_floor ? format_double(*machine_floor) : "auto";
  kv["quad_regular"] = std::to_string(quad.regular);
  kv["quad_singular"] = std::to_string(quad.singular);
  kv["rwg_trace"] = to_string(rwg_trace);
  kv["seed"] = std::to_string(seed);
  kv["solution"] = solution;
  kv["target"] = to_string(target);
  kv["tol"] = format_double(tol);
  kv["trace_order"] = std::to_string(trace_order);
  kv["wavenumber"] = format_double(wavenumber.real()) + " " + format_double(wavenumber.imag());
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + v + "\n";
  return s;
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void load_config(std::istream& is, ExperimentConfig& cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    cfg.set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void load_config(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file " + path);
  load_config(f, cfg);
}

std::vector<int> default_levels(Domain d) {
  return d == Domain::Sphere ? std::vector<int>{2, 3, 4} : std::vector<int>{0, 1, 2, 3};
}

std::vector<int> resolve_levels(const ExperimentConfig& cfg, Domain d, std::size_t min_count) {
  std::vector<int> ls = cfg.levels.empty() ? default_levels(d) : cfg.levels;
  if (ls.size() < min_count) {
    throw std::invalid_argument("need at least " + std::to_string(min_count) + " levels");
  }
  // desk caps: sphere 2048 panels, cube 768 (diagonal) or 1536 (centre)
  const int cap = cfg.full ? 6 : (d == Domain::Sphere ? 4 : 3);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] < 0) throw std::invalid_argument("levels must be >= 0");
    if (i > 0 && ls[i] <= ls[i - 1]) throw std::invalid_argument("levels must be strictly increasing");
    if (ls[i] > cap) {
      throw std::invalid_argument("level " + std::to_string(ls[i]) + " exceeds the " + to_string(d) +
                                  " cap " + std::to_string(cap) + (cfg.full ? "" : " (use --full)"));
    }
  }
  return ls;
}

std::shared_ptr<const Mesh> make_level_mesh(Domain d, int level, CubeSplit split) {
  if (d == Domain::Sphere) return std::make_shared<const Mesh>(make_sphere_mesh(level));
  return std::make_shared<const Mesh>(make_cube_mesh(1 << level, split));
}

// ---------------------------------------------------------------- output

namespace {

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// display width in code points, good enough for the symbols we print
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace

void write_csv(std::ostream& os, const Report& r, const ExperimentConfig& cfg) {
  os << "# config-hash: " << cfg.hash() << "\n";
  for (std::size_t t = 0; t < r.tables.size(); ++t) {
    const Table& tab = r.tables[t];
    if (t) os << "\n";
    os << "# " << tab.title << "\n";
    for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? "," : "") << csv_field(tab.columns[c]);
    os << "\n";
    for (const auto& row : tab.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
      os << "\n";
    }
  }
}

void write_markdown(std::ostream& os, const Report& r, const ExperimentConfig& cfg) {
  os << "<!-- config-hash: " << cfg.hash() << " -->\n";
  for (const Table& tab : r.tables) {
    os << "\n### " << tab.title << "\n\n";
    std::vector<std::size_t> w(tab.columns.size(), 3);
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = std::max(w[c], width(md_escape(tab.columns[c])));
    for (const auto& row : tab.rows) {
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], width(md_escape(row[c])));
    }
    auto line = [&](const std::vector<std::string>& cells) {
      os << "|";
      for (std::size_t c = 0; c < w.size(); ++c) {
        const std::string s = c < cells.size() ? md_escape(cells[c]) : "";
        os << " " << s << std::string(w[c] - width(s), ' ') << " |";
      }
      os << "\n";
    };
    line(tab.columns);
    os << "|";
    for (std::size_t c = 0; c < w.size(); ++c) os << std::string(w[c] + 2, '-') << "|";
    os << "\n";
    for (const auto& row : tab.rows) line(row);
  }
}

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "fail";
  std::ostringstream os;
  os << std::setprecision(4) << std::scientific << x;
  return os.str();
}

std::string fmt_rate(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

bool failing(Verdict v) { return !is_pass(v); }

}  // namespace

Table study_table(const Study& s) {
  Table t;
  t.title = s.title;
  t.columns = {"level", "elements", "h"};
  for (const Series& ser : s.series) {
    t.columns.push_back(ser.name);
    t.columns.push_back(ser.name + " ooc");
  }
  const std::size_t n = s.levels.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row = {std::to_string(s.levels[i]), std::to_string(s.elements[i]), fmt(s.h[i])};
    for (const Series& ser : s.series) {
      row.push_back(fmt(ser.values[i]));
      const auto& c = ser.verdict.consecutive;
      row.push_back(i > 0 && i - 1 < c.size() ? fmt_rate(c[i - 1]) : "");
    }
    t.rows.push_back(std::move(row));
  }
  const bool rated = n >= 2;
  std::vector<std::string> ooc = {"ooc", "", ""}, eoc = {"eoc", "", ""}, verdict = {"verdict", "", ""};
  for (const Series& ser : s.series) {
    const RateVerdict& v = ser.verdict;
    const bool have_rate = rated && !v.consecutive.empty();
    std::string rate = "n/a";
    if (have_rate) rate = fmt_rate(ser.consecutive_only ? v.consecutive.back() : v.fitted_rate);
    ooc.insert(ooc.end(), {rate, ""});
    eoc.insert(eoc.end(), {fmt_rate(ser.expected), ""});
    verdict.insert(verdict.end(), {rated ? std::string(to_string(v.verdict)) : "n/a", ""});
  }
  t.rows.push_back(std::move(ooc));
  t.rows.push_back(std::move(eoc));
  t.rows.push_back(std::move(verdict));
  return t;
}

Verdict combine(const std::vector<Verdict>& vs) {
  auto any = [&](Verdict x) { return std::find(vs.begin(), vs.end(), x) != vs.end(); };
  if (any(Verdict::SolverFailure)) return Verdict::SolverFailure;
  if (any(Verdict::Fail)) return Verdict::Fail;
  if (any(Verdict::Fluctuating)) return Verdict::Fluctuating;
  if (!vs.empty() && std::all_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::MachinePrecision; })) {
    return Verdict::MachinePrecision;
  }
  return Verdict::Pass;
}

bool agree(Verdict calderon, Verdict mms) { return is_pass(calderon) == is_pass(mms); }

// ---------------------------------------------------------------- studies

namespace {

struct LaplaceLevel {
  int level = 0;
  std::shared_ptr<const Mesh> mesh;
  double h = 0.0;
  LaplaceOperators ops;
  LaplaceData data;
};

struct MaxwellLevel {
  int level = 0;
  std::shared_ptr<const Mesh> mesh;
  double h = 0.0;
  MaxwellOperators ops;
  MaxwellData data;
  ComplexMatrix norm_matrix;  // empty: use the clean E
};

Series series(const std::string& name, double expected, bool consecutive_only = false) {
  Series s;
  s.name = name;
  s.expected = expected;
  s.consecutive_only = consecutive_only;
  return s;
}

ManufacturedSolution solution_of(const ExperimentConfig& cfg) { return solution_by_name(cfg.solution); }

std::vector<LaplaceLevel> prepare_laplace(const ExperimentConfig& cfg, const ManufacturedSolution& sol,
                                          const std::vector<int>& levels) {
  std::vector<LaplaceLevel> out;
  for (int l : levels) {
    LaplaceLevel lv;
    lv.level = l;
    lv.mesh = make_level_mesh(sol.domain, l, cfg.cube_split);
    lv.h = meshwidth(*lv.mesh);
    lv.ops = assemble_laplace(lv.mesh, cfg.quad);
    lv.data = discretize_laplace(sol, lv.ops, cfg.trace_order);
    out.push_back(std::move(lv));
  }
  return out;
}

std::vector<MaxwellLevel> prepare_maxwell(const ExperimentConfig& cfg, const ManufacturedSolution& sol,
                                          const std::vector<int>& levels) {
  std::vector<MaxwellLevel> out;
  for (int l : levels) {
    MaxwellLevel lv;
    lv.level = l;
    lv.mesh = make_level_mesh(sol.domain, l, cfg.cube_split);
    lv.h = meshwidth(*lv.mesh);
    lv.ops = assemble_maxwell(lv.mesh, sol.wavenumber, cfg.quad);
    lv.data = discretize_maxwell(sol, lv.ops, cfg.rwg_trace, cfg.trace_order);
    if (cfg.er_norm == EnergyNorm::ImaginaryK) {
      lv.norm_matrix = assemble_efie(lv.ops.rwg, cplx(0.0, 1.0), cfg.quad).data;
    }
    out.push_back(std::move(lv));
  }
  return out;
}

FaultSpec fault_spec(const ExperimentConfig& cfg, double h) { return FaultSpec{cfg.fault, cfg.seed, h}; }

LaplaceOperators faulted(const LaplaceOperators& ops, const ExperimentConfig& cfg, double h) {
  LaplaceOperators f = ops;
  if (cfg.fault == FaultKind::None) return f;
  if (cfg.target == Target::V) {
    f.V.data = apply_fault(ops.V.data, fault_spec(cfg, h));
  } else if (cfg.target == Target::W) {
    f.W.data = apply_fault(ops.W.data, fault_spec(cfg, h));
    f.Wm = stabilize_hypersingular(f.W);
  }
  return f;
}

MaxwellOperators faulted(const MaxwellOperators& ops, const ExperimentConfig& cfg, double h) {
  MaxwellOperators f = ops;
  if (cfg.fault != FaultKind::None && cfg.target == Target::E) f.E.data = apply_fault(ops.E.data, fault_spec(cfg, h));
  return f;
}

void dump_if_requested(const ExperimentConfig& cfg, const std::map<std::string, const RealMatrix*>& real,
                       const std::map<std::string, const ComplexMatrix*>& complex) {
  if (cfg.dump_tag.empty()) return;
  std::ofstream f(cfg.dump_path);
  if (!f) throw std::runtime_error("cannot write " + cfg.dump_path);
  if (auto it = real.find(cfg.dump_tag); it != real.end()) {
    write_matrix_csv(f, *it->second);
  } else if (auto jt = complex.find(cfg.dump_tag); jt != complex.end()) {
    write_matrix_csv(f, *jt->second);
  } else {
    std::string tags;
    for (const auto& [k, v] : real) tags += " " + k;
    for (const auto& [k, v] : complex) tags += " " + k;
    throw std::invalid_argument("cannot dump '" + cfg.dump_tag + "' here; available:" + tags);
  }
}

void mesh_out_if_requested(const ExperimentConfig& cfg, const Mesh& m) {
  if (!cfg.mesh_out.empty()) write_off(cfg.mesh_out, m);
}

void classify_all(Study& s, double floor, const ExperimentConfig& cfg) {
  ClassifyOptions opts;
  opts.machine_floor = floor;
  opts.fluctuation_band = cfg.fluctuation_band;
  for (Series& ser : s.series) {
    if (s.h.size() < 2) {
      ser.verdict.expected_rate = ser.expected;
      ser.verdict.verdict = Verdict::Pass;
      continue;
    }
    ser.verdict = ser.consecutive_only ? classify_consecutive(s.h, ser.values, ser.expected, opts)
                                       : classify(s.h, ser.values, ser.expected, opts);
  }
}

double max_coeff(const ComplexVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

enum LaplaceSeries { kResiduals = 1, kNeumann = 2, kDirichlet = 4 };

// Residuals of `system` plus the selected MMS errors, one row per level.
Study laplace_study(const ExperimentConfig& cfg, const ManufacturedSolution& sol,
                    const std::vector<LaplaceLevel>& lvls, int which, bool inject) {
  Study s;
  if (which & kResiduals) {
    s.series.push_back(series("rhoD_inf", 3.0));
    s.series.push_back(series("rhoD_2", 2.0));
    s.series.push_back(series("rhoN_inf", 2.0));
    s.series.push_back(series("rhoN_2", 1.0));
  }
  if (which & kNeumann) s.series.push_back(series("eN", 0.5, true));
  if (which & kDirichlet) s.series.push_back(series("eD", 1.5, true));
  double trace_max = 0.0;
  for (std::size_t i = 0; i < lvls.size(); ++i) {
    const LaplaceLevel& lv = lvls[i];
    s.levels.push_back(lv.level);
    s.elements.push_back(lv.mesh->panel_count());
    s.h.push_back(lv.h);
    trace_max = std::max({trace_max, max_coeff(lv.data.dirichlet.values), max_coeff(lv.data.neumann.values)});
    const LaplaceOperators sys = inject ? faulted(lv.ops, cfg, lv.h) : lv.ops;
    std::size_t k = 0;
    if (which & kResiduals) {
      const LaplaceResidual r = laplace_residual(sys, sol.side, lv.data);
      s.series[k++].values.push_back(norm_inf(r.rho_d));
      s.series[k++].values.push_back(r.rho_d.norm());
      s.series[k++].values.push_back(norm_inf(r.rho_n));
      s.series[k++].values.push_back(r.rho_n.norm());
    }
    if (which & kNeumann) {
      const MmsResult m = laplace_mms_neumann(lv.ops, sys, sol.side, lv.data, cfg.tol);
      s.series[k++].values.push_back(m.ok ? m.error : kNaN);
    }
    if (which & kDirichlet) {
      const MmsResult m = laplace_mms_dirichlet(lv.ops, sys, sol.side, lv.data, cfg.tol);
      s.series[k++].values.push_back(m.ok ? m.error : kNaN);
    }
    if (i + 1 == lvls.size()) {
      mesh_out_if_requested(cfg, *lv.mesh);
      dump_if_requested(cfg,
                        {{"V", &sys.V.data}, {"K", &sys.K.data}, {"Kp", &sys.Kp.data}, {"W", &sys.W.data},
                         {"Wm", &sys.Wm.data}, {"Wtilde", &sys.Wtilde.data}, {"M01", &sys.M01}, {"M10", &sys.M10}},
                        {});
    }
  }
  classify_all(s, cfg.machine_floor.value_or(1e-6 * trace_max), cfg);
  return s;
}

Study maxwell_study(const ExperimentConfig& cfg, const ManufacturedSolution& sol,
                    const std::vector<MaxwellLevel>& lvls, bool residuals, bool inject) {
  Study s;
  if (residuals) {
    s.series.push_back(series("rho1_2", 1.0));
    s.series.push_back(series("rho1_inf", 2.0));
    s.series.push_back(series("rho2_2", 1.0));
    s.series.push_back(series("rho2_inf", 2.0));
  }
  s.series.push_back(series("eR", 1.5, true));
  double trace_max = 0.0;
  for (std::size_t i = 0; i < lvls.size(); ++i) {
    const MaxwellLevel& lv = lvls[i];
    s.levels.push_back(lv.level);
    s.elements.push_back(lv.mesh->panel_count());
    s.h.push_back(lv.h);
    trace_max = std::max({trace_max, max_coeff(lv.data.tangential.values), max_coeff(lv.data.magnetic.values)});
    const MaxwellOperators sys = inject ? faulted(lv.ops, cfg, lv.h) : lv.ops;
    std::size_t k = 0;
    if (residuals) {
      const MaxwellResidual r = maxwell_residual(sys, sol.side, lv.data);
      s.series[k++].values.push_back(r.rho_1.norm());
      s.series[k++].values.push_back(norm_inf(r.rho_1));
      s.series[k++].values.push_back(r.rho_2.norm());
      s.series[k++].values.push_back(norm_inf(r.rho_2));
    }
    const MmsResult m = maxwell_mms(lv.ops, sys, sol.side, lv.data, cfg.tol);
    double e = m.ok ? m.error : kNaN;
    if (m.ok && lv.norm_matrix.size() > 0) e = energy_norm(lv.norm_matrix, lv.data.magnetic.values - m.solve.x);
    s.series[k++].values.push_back(e);
    if (i + 1 == lvls.size()) {
      mesh_out_if_requested(cfg, *lv.mesh);
      dump_if_requested(cfg, {{"M", &sys.M.data}}, {{"E", &sys.E.data}, {"H", &sys.H.data}});
    }
  }
  classify_all(s, cfg.machine_floor.value_or(1e-6 * trace_max), cfg);
  return s;
}

void require_physics(const ManufacturedSolution& sol, Target t) {
  const bool maxwell = sol.physics == Physics::Maxwell;
  if (maxwell != (t == Target::E)) {
    throw std::invalid_argument(std::string("target ") + to_string(t) + " does not fit solution " + sol.name);
  }
}

std::string study_title(const char* what, const ManufacturedSolution& sol, const ExperimentConfig& cfg) {
  std::string t = std::string(what) + ": solution " + sol.name + " (" + to_string(sol.domain) + ", " +
                  to_string(sol.side) + ")";
  if (cfg.fault != FaultKind::None && std::string(what) == "inject") {
    t += ", fault " + std::string(to_string(cfg.fault)) + " on " + to_string(cfg.target);
  }
  return t;
}

InjectResult inject_from(const ExperimentConfig& cfg, const ManufacturedSolution& sol,
                         const std::vector<LaplaceLevel>* lap, const std::vector<MaxwellLevel>* mw) {
  InjectResult out;
  if (lap) {
    const int mms = cfg.target == Target::V ? kNeumann : kDirichlet;
    out.study = laplace_study(cfg, sol, *lap, kResiduals | mms, true);
  } else {
    out.study = maxwell_study(cfg, sol, *mw, true, true);
  }
  out.study.title = study_title("inject", sol, cfg);
  std::vector<Verdict> residual_verdicts;
  for (std::size_t i = 0; i + 1 < out.study.series.size(); ++i) {
    residual_verdicts.push_back(out.study.series[i].verdict.verdict);
  }
  out.calderon = combine(residual_verdicts);
  out.mms = out.study.series.back().verdict.verdict;
  out.agree = agree(out.calderon, out.mms);
  return out;
}

}  // namespace

Study run_basis_norms(const ExperimentConfig& cfg) {
  const ManufacturedSolution sol = solution_of(cfg);
  const std::vector<int> levels = resolve_levels(cfg, sol.domain, 1);
  Study s;
  s.title = "basis-norms: " + std::string(to_string(sol.domain)) + " max diagonal";
  const bool maxwell = sol.physics == Physics::Maxwell;
  if (maxwell) {
    s.series.push_back(series("maxdiag_E", 1.0));
  } else {
    s.series.push_back(series("maxdiag_V", 3.0));
    s.series.push_back(series("maxdiag_W", 1.0));
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto mesh = make_level_mesh(sol.domain, levels[i], cfg.cube_split);
    s.levels.push_back(levels[i]);
    s.elements.push_back(mesh->panel_count());
    s.h.push_back(meshwidth(*mesh));
    const bool last = i + 1 == levels.size();
    if (last) mesh_out_if_requested(cfg, *mesh);
    if (maxwell) {
      const ComplexGalerkin e = assemble_efie(make_space(mesh, SpaceKind::RWG), cfg.wavenumber, cfg.quad);
      s.series[0].values.push_back(e.data.diagonal().cwiseAbs().maxCoeff());
      if (last) dump_if_requested(cfg, {}, {{"E", &e.data}});
    } else {
      const RealGalerkin v = assemble_single_layer(make_space(mesh, SpaceKind::P0), cfg.quad);
      const RealGalerkin w = assemble_hypersingular(make_space(mesh, SpaceKind::P1), cfg.quad);
      s.series[0].values.push_back(v.data.diagonal().cwiseAbs().maxCoeff());
      s.series[1].values.push_back(w.data.diagonal().cwiseAbs().maxCoeff());
      if (last) dump_if_requested(cfg, {{"V", &v.data}, {"W", &w.data}}, {});
    }
  }
  classify_all(s, 0.0, cfg);
  return s;
}

Study run_residuals(const ExperimentConfig& cfg) {
  const ManufacturedSolution sol = solution_of(cfg);
  const std::vector<int> levels = resolve_levels(cfg, sol.domain);
  Study s;
  if (sol.physics == Physics::Laplace) {
    s = laplace_study(cfg, sol, prepare_laplace(cfg, sol, levels), kResiduals | kNeumann | kDirichlet, false);
  } else {
    s = maxwell_study(cfg, sol, prepare_maxwell(cfg, sol, levels), true, false);
  }
  s.title = study_title("residuals", sol, cfg);
  return s;
}

InjectResult run_inject(const ExperimentConfig& cfg) {
  const ManufacturedSolution sol = solution_of(cfg);
  require_physics(sol, cfg.target);
  const std::vector<int> levels = resolve_levels(cfg, sol.domain);
  if (sol.physics == Physics::Laplace) {
    const auto lvls = prepare_laplace(cfg, sol, levels);
    return inject_from(cfg, sol, &lvls, nullptr);
  }
  const auto lvls = prepare_maxwell(cfg, sol, levels);
  return inject_from(cfg, sol, nullptr, &lvls);
}

SpectrumResult run_spectrum(const ExperimentConfig& cfg) {
  const ManufacturedSolution sol = solution_of(cfg);
  require_physics(sol, cfg.target);
  if (cfg.target == Target::E) throw std::invalid_argument("spectrum needs a symmetric target (V or W)");
  const std::vector<int> levels = resolve_levels(cfg, sol.domain, 1);
  const auto lvls = prepare_laplace(cfg, sol, {levels.front()});
  const LaplaceLevel& lv = lvls.front();
  const LaplaceOperators sys = faulted(lv.ops, cfg, lv.h);
  mesh_out_if_requested(cfg, *lv.mesh);
  dump_if_requested(cfg, {{"V", &sys.V.data}, {"W", &sys.W.data}, {"Wm", &sys.Wm.data}}, {});

  const double s = 0.5 * (sol.side == Side::Exterior ? 1.0 : -1.0);
  const bool v = cfg.target == Target::V;
  const RealMatrix& clean = v ? lv.ops.V.data : lv.ops.Wm.data;
  const RealMatrix& bad = v ? sys.V.data : sys.Wm.data;
  const ComplexVector rhs = v ? ComplexVector((lv.ops.K.data - s * lv.ops.M01) * lv.data.dirichlet.values)
                              : ComplexVector(-(s * lv.ops.M10 + lv.ops.Kp.data) * lv.data.neumann.values);
  SpectrumResult out;
  out.level = lv.level;
  out.elements = lv.mesh->panel_count();
  out.clean = symmetric_eigenvalues(clean);
  out.faulted = symmetric_eigenvalues(bad);
  const SolveResult a = cg(clean, rhs, cfg.tol);
  const SolveResult b = cg(bad, rhs, cfg.tol);
  out.cg_clean = a.converged;
  out.cg_faulted = b.converged;
  out.it_clean = a.iterations;
  out.it_faulted = b.iterations;
  return out;
}

std::vector<SummaryRow> run_report(const ExperimentConfig& base) {
  std::vector<SummaryRow> rows;
  const FaultKind faults[] = {FaultKind::A, FaultKind::B, FaultKind::C, FaultKind::D, FaultKind::E};
  for (const char* name : {"1a", "2"}) {
    ExperimentConfig cfg = base;
    cfg.solution = name;
    const ManufacturedSolution sol = solution_of(cfg);
    const auto lvls = prepare_laplace(cfg, sol, resolve_levels(cfg, sol.domain));
    for (Target t : {Target::V, Target::W}) {
      for (FaultKind f : faults) {
        cfg.target = t;
        cfg.fault = f;
        const InjectResult r = inject_from(cfg, sol, &lvls, nullptr);
        rows.push_back({name, t, f, r.calderon, r.mms, r.agree});
      }
    }
  }
  ExperimentConfig cfg = base;
  cfg.solution = "m3";
  cfg.target = Target::E;
  const ManufacturedSolution sol = solution_of(cfg);
  const auto lvls = prepare_maxwell(cfg, sol, resolve_levels(cfg, sol.domain));
  for (FaultKind f : faults) {
    cfg.fault = f;
    const InjectResult r = inject_from(cfg, sol, nullptr, &lvls);
    rows.push_back({"m3", Target::E, f, r.calderon, r.mms, r.agree});
  }
  return rows;
}

// ---------------------------------------------------------------- reports

namespace {

bool study_fails(const Study& s) {
  for (const Series& ser : s.series) {
    if (s.h.size() >= 2 && failing(ser.verdict.verdict)) return true;
  }
  return false;
}

}  // namespace

Report basis_norms_report(const ExperimentConfig& cfg) {
  const Study s = run_basis_norms(cfg);
  return {{study_table(s)}, study_fails(s)};
}

Report residuals_report(const ExperimentConfig& cfg) {
  const Study s = run_residuals(cfg);
  return {{study_table(s)}, study_fails(s)};
}

Report inject_report(const ExperimentConfig& cfg) {
  const InjectResult r = run_inject(cfg);
  Table v{"verdicts", {"calderon", "mms", "agree"},
          {{to_string(r.calderon), to_string(r.mms), r.agree ? "yes" : "no"}}};
  const bool fail = failing(r.calderon) || failing(r.mms);
  return {{study_table(r.study), v}, fail};
}

Report spectrum_report(const ExperimentConfig& cfg) {
  const SpectrumResult r = run_spectrum(cfg);
  const std::string m = cfg.target == Target::V ? "V" : "Wm";
  Table eig{"eigenvalues of " + m + " (level " + std::to_string(r.level) + ", " + std::to_string(r.elements) +
                " elements, fault " + to_string(cfg.fault) + ")",
            {"index", "clean", "faulted"},
            {}};
  for (Eigen::Index i = 0; i < r.clean.size(); ++i) {
    eig.rows.push_back({std::to_string(i), format_double(r.clean(i)), format_double(r.faulted(i))});
  }
  Table cg_tab{"cg on the mms system",
               {"matrix", "min_eigenvalue", "cg_converged", "iterations"},
               {{"clean", format_double(r.clean(0)), r.cg_clean ? "yes" : "no", std::to_string(r.it_clean)},
                {"faulted", format_double(r.faulted(0)), r.cg_faulted ? "yes" : "no", std::to_string(r.it_faulted)}}};
  return {{eig, cg_tab}, false};
}

Report summary_report(const ExperimentConfig& cfg) {
  Table t{"summary of convergence results", {"solution", "target", "fault", "calderon", "mms", "agree"}, {}};
  bool fail = false;
  for (const SummaryRow& r : run_report(cfg)) {
    t.rows.push_back({r.solution, to_string(r.target), to_string(r.fault), verdict_symbol(r.calderon),
                      verdict_symbol(r.mms), r.agree ? "yes" : "no"});
    fail = fail || failing(r.calderon) || failing(r.mms);
  }
  return {{t}, fail};
}

}  // namespace calderon
