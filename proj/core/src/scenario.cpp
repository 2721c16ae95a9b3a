#include "wirebarrier/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <thread>

#include "wirebarrier/branch.hpp"
#include "wirebarrier/critical.hpp"
#include "wirebarrier/impurity.hpp"
#include "wirebarrier/oned.hpp"
#include "wirebarrier/trajectory.hpp"

namespace wirebarrier {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> meta;
  // optional leading text column (e.g. branch labels)
  std::string tag_column;
  std::vector<std::string> tags;
};

void write_table(const Table& t, const Scenario& sc, const std::string& path,
                 const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "# solver_version = " << kSolverVersion << "\n";
    os << "# kind = " << sc.kind << "\n";
    for (const auto& [k, v] : sc.keys) os << "# " << k << " = " << v << "\n";
    for (const auto& [k, v] : t.meta) os << "#: " << k << " = " << v << "\n";
    if (!t.tag_column.empty()) os << t.tag_column << ",";
    for (size_t i = 0; i < t.columns.size(); ++i)
      os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
    os << "\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
      if (!t.tag_column.empty()) os << t.tags[r] << ",";
      const auto& row = t.rows[r];
      for (size_t i = 0; i < row.size(); ++i) os << fmt(row[i]) << (i + 1 < row.size() ? "," : "");
      os << "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["meta"]["solver_version"] = kSolverVersion;
    j["meta"]["kind"] = sc.kind;
    for (const auto& [k, v] : sc.keys) j["meta"][k] = v;
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    if (!t.tag_column.empty()) cols.push_back(t.tag_column);
    for (const auto& c : t.columns) cols.push_back(c);
    j["columns"] = std::move(cols);
    auto& rows = j["rows"];
    rows = nlohmann::ordered_json::array();
    for (size_t ri = 0; ri < t.rows.size(); ++ri) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      if (!t.tag_column.empty()) r.push_back(t.tags[ri]);
      for (double v : t.rows[ri]) r.push_back(fmt(v));  // text-formatted for byte determinism
      rows.push_back(std::move(r));
    }
    os << j.dump(2) << "\n";
  } else {
    throw ConfigError("unknown output format '" + format + "' (csv or json)");
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file " + path);
  f << os.str();
  if (!f) throw IoError("write failed for " + path);
}

BarrierParams barrier_from(const Scenario& sc) {
  BarrierParams p;
  p.B = sc.get_double("B", 30.0);
  p.gamma = sc.require_double("gamma");
  const double a0sq = sc.get_double("alpha0_sq", -1.0);
  p.alpha0 = a0sq >= 0.0 ? std::sqrt(a0sq) : sc.get_double("alpha0", 0.0);
  p.a = sc.get_double("a", 2.0);
  p.validate();
  return p;
}

ImpurityParams impurity_from(const Scenario& sc) {
  ImpurityParams ip;
  ip.u = sc.get_double("u", 1e-6);
  ip.l = sc.require_double("l");
  ip.a_imp = sc.require_double("a_imp");
  const double k2 = sc.get_double("k_sq", -1.0);
  ip.k = k2 >= 0.0 ? std::sqrt(k2) : sc.require_double("k");
  return ip;
}

// ---- scenario executors -------------------------------------------------

Table run_branches(const Scenario& sc, const RunOptions& ropt) {
  const BarrierParams p = barrier_from(sc);
  TraceOptions opt;
  opt.seed_tolerance = ropt.seed_tolerance;
  opt.x_min = sc.get_double("x_min", 0.0);
  opt.x_max = sc.get_double("x_max", 1.6);
  opt.extend_past_folds = sc.get_bool("extend_past_folds", false);
  opt.extension_length = sc.get_double("extension_length", 0.4);
  const double y = sc.get_double("y", 0.0);
  auto curves = branches_at(p, y, opt);

  Table t;
  t.tag_column = "branch_label";
  t.columns = {"y", "x", "re_v", "im_v", "re_sigma", "im_sigma", "log_psi_mag"};
  std::string labels;
  std::set<std::string> seen;
  for (const auto& c : curves) {
    if (seen.insert(c.label).second) labels += (labels.empty() ? "" : "|") + c.label;
    for (const auto& s : c.samples) {
      t.tags.push_back(c.label);
      t.rows.push_back({c.y, s.x, s.v.real(), s.v.imag(), s.sigma.real(), s.sigma.imag(),
                        s.log_psi_mag});
    }
  }
  t.meta["labels"] = labels;
  t.meta["branch_count"] = std::to_string(curves.size());
  t.meta["sheet_convention"] = "principal sqrt at the seed, continuity along the curve";
  return t;
}

Table run_critical(const Scenario& sc) {
  const BarrierParams p = barrier_from(sc);
  Table t;
  t.tag_column = "name";
  t.columns = {"value"};
  std::vector<std::pair<std::string, double>> vals;
  const CriticalSet ext = find_extrema(p);
  vals.push_back({"v_a", ext.v_a});
  vals.push_back({"x_a", ext.x_a});
  vals.push_back({"v_b", ext.v_b});
  vals.push_back({"x_b", ext.x_b});
  const CriticalWidth cw = find_critical_width(p);
  vals.push_back({"a0", cw.a0});
  vals.push_back({"x0", cw.x0});
  vals.push_back({"v0", cw.v0});
  try {
    const CriticalSet folds = find_folds(p, 0.0);
    vals.push_back({"re_v_c1", folds.v_c1.real()});
    vals.push_back({"im_v_c1", folds.v_c1.imag()});
    vals.push_back({"re_v_c2", folds.v_c2.real()});
    vals.push_back({"im_v_c2", folds.v_c2.imag()});
    vals.push_back({"re_x_c1", folds.x_c1.real()});
    vals.push_back({"re_x_c2", folds.x_c2.real()});
  } catch (const SolverError&) {
    // no fold pair in this regime
  }
  try {
    const SingularExpansion se = unfold_cubic(p);
    vals.push_back({"c_lin_y", se.c_lin_y});
    vals.push_back({"c_cubic", se.c_cubic});
    vals.push_back({"c_lin_av", se.c_lin_av});
    vals.push_back({"delta_coeff", se.delta_coeff});
    vals.push_back({"D_coeff", se.D_coeff});
    vals.push_back({"tan_theta", se.tan_theta});
    vals.push_back({"theta_deg", se.theta_deg});
    vals.push_back({"sing_x1", se.sing_x1});
    vals.push_back({"sing_y1", se.sing_y1});
    vals.push_back({"sing_x2", se.sing_x2});
    vals.push_back({"sing_y2", se.sing_y2});
    vals.push_back({"literal_y_offset", se.literal_y_offset});
    t.meta["Delta_convention"] = "pierce offset, defined for a < a0; positive toward +y";
    const ActionExpansion ae = action_expansion_coeffs(p);
    vals.push_back({"slope_const", ae.slope_const});
    vals.push_back({"slope_dv", ae.slope_dv});
    vals.push_back({"slope_lin_reduced", ae.slope_lin_reduced});
    vals.push_back({"quartic_reduced", ae.quartic_reduced});
  } catch (const SolverError&) {
    // outside the near-critical window
  }
  for (const auto& [name, value] : vals) {
    t.tags.push_back(name);
    t.rows.push_back({value});
  }
  return t;
}

Table run_penetration(const Scenario& sc) {
  const BarrierParams base = barrier_from(sc);
  Table t;
  const std::string axis = sc.get_string("sweep_param", "");
  t.columns = {"sweep_value", "A0", "A1", "w_log", "wkb_log", "x_b", "v_b", "hj_exponent",
               "rel_diff"};
  const int count = axis.empty() ? 1 : sc.get_int("sweep_count", 2);
  const double lo = sc.get_double("sweep_min", 0.0);
  const double hi = sc.get_double("sweep_max", 0.0);
  bool all_exceed = true;
  for (int i = 0; i < count; ++i) {
    BarrierParams p = base;
    double value = 0.0;
    if (!axis.empty()) {
      value = lo + (hi - lo) * double(i) / (count - 1);
      if (axis == "a")
        p.a = value;
      else if (axis == "alpha0_sq")
        p.alpha0 = std::sqrt(value);
      else if (axis == "gamma")
        p.gamma = value;
      else if (axis == "B")
        p.B = value;
      else
        throw ConfigError("penetration cannot sweep '" + axis + "'");
      p.validate();
    }
    const PenetrationResult r = penetration(p);
    const double hj = penetration_exponent_hj(p);
    const double rd = std::abs((r.A0 + r.A1) - hj) / std::max(std::abs(r.A0 + r.A1), 1e-300);
    all_exceed = all_exceed && r.exceeds_wkb_baseline;
    t.rows.push_back({value, r.A0, r.A1, r.w_log, r.wkb_log, r.x_b, r.v_b, hj, rd});
  }
  t.meta["exponents"] = "natural log scale";
  t.meta["exceeds_wkb_baseline"] = all_exceed ? "true" : "false";
  return t;
}

Table run_threshold_sweep(const Scenario& sc) {
  const BarrierParams p = barrier_from(sc);
  Table t;
  t.columns = {"a", "A0_over_B", "A1_over_B", "w_log_over_B", "x_b", "v_b"};
  const double lo = sc.get_double("sweep_min", 1.9);
  const double hi = sc.get_double("sweep_max", 3.2);
  const int n = sc.get_int("sweep_count", 27);
  for (int i = 0; i < n; ++i) {
    BarrierParams q = p;
    q.a = lo + (hi - lo) * double(i) / (n - 1);
    const PenetrationResult r = penetration(q);
    t.rows.push_back({q.a, r.A0 / q.B, r.A1 / q.B, r.w_log / q.B, r.x_b, r.v_b});
  }
  const ThresholdResult th = find_threshold(p);
  t.meta["a_R"] = fmt(th.a_R);
  t.meta["slope"] = fmt(th.slope);
  t.meta["x_b_at_threshold"] = fmt(th.x_b);
  return t;
}

Table run_impurity(const Scenario& sc) {
  const ImpurityParams ip = impurity_from(sc);
  const double B = sc.get_double("B", 30.0);
  Table t;
  t.columns = {"x", "y_traj", "neg_im_sigma1", "closed_form", "ratio"};
  const double x_lo = sc.get_double("x_min", 1.2);
  const double x_hi = sc.get_double("x_max", 2.0);
  const int n = sc.get_int("samples", 9);
  const double k2 = ip.k_sq(), a2 = ip.a_imp * ip.a_imp;
  const double cf = a2 * ip.l * ip.u / (8.0 * k2 * (2.0 * k2 - ip.l)) *
                    std::exp((4.0 * k2 - ip.l * ip.l) / a2);
  double worst_tail = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + (x_hi - x_lo) * double(i) / (n - 1);
    const double y = 2.0 * ip.k * std::sqrt(x - 1.0);
    double tail = 0.0;
    const Complex s1 = sigma1(x, y, ip, &tail);
    worst_tail = std::max(worst_tail, tail);
    t.rows.push_back({x, y, -s1.imag(), cf, -s1.imag() / cf});
  }
  t.meta["truncation_tail_bound"] = fmt(worst_tail);
  const EnhancementReport rep = enhancement_report(ip, B);
  t.meta["u_eff"] = fmt(rep.u_eff);
  t.meta["perturbation_ok"] = rep.perturbation_ok ? "true" : "false";
  t.meta["semiclassical_ok"] = rep.semiclassical_ok ? "true" : "false";
  t.meta["window_ok"] = rep.window_ok ? "true" : "false";
  t.meta["impurity_after_exit"] = rep.impurity_after_exit ? "true" : "false";
  return t;
}

Table run_stokes1d(const Scenario& sc) {
  const double E = sc.require_double("E");
  const double V = sc.require_double("V");
  const double a = sc.get_double("a", 1.0);
  const StokesLineSet set = stokes_lines_1d(E, V, a, sc.get_double("trace_radius", 0.0));
  Table t;
  t.columns = {"line_id", "re_x", "im_x"};
  for (size_t i = 0; i < set.lines.size(); ++i)
    for (const auto& z : set.lines[i]) t.rows.push_back({double(i), z.real(), z.imag()});
  t.meta["origin"] = fmt(set.origin.real()) + "+" + fmt(set.origin.imag()) + "i";
  for (size_t i = 0; i < set.im_residuals.size(); ++i)
    t.meta["im_residual_" + std::to_string(i)] = fmt(set.im_residuals[i]);
  return t;
}

Table run_stokes2d(const Scenario& sc) {
  const BarrierParams p = barrier_from(sc);
  const StokesLineSet set = trace_stokes_lines_2d(p, sc.get_double("trace_radius", 1.0));
  Table t;
  t.columns = {"line_id", "re_v", "im_v"};
  for (size_t i = 0; i < set.lines.size(); ++i)
    for (const auto& z : set.lines[i]) t.rows.push_back({double(i), z.real(), z.imag()});
  t.meta["origin"] = fmt(set.origin.real()) + "+" + fmt(set.origin.imag()) + "i";
  return t;
}

Table run_wire_zero_field(const Scenario& sc) {
  const double beta0 = sc.get_double("beta0", 0.1118);
  const double width = sc.require_double("width");
  const double E = sc.get_double("E", 0.0);
  const double u0 = sc.get_double("u0", 1.0);
  const std::string prof = sc.get_string("profile", "sech");
  const WireProfile wp = prof == "gaussian" ? WireProfile::gaussian : WireProfile::sech;
  const WireZeroFieldResult r =
      wire_overbarrier_reflection(beta0, width, E, u0, {1.0, 1.0, 0.5, 1.0}, wp,
                                  sc.get_int("sweep_count", 10));
  Table t;
  t.columns = {"a", "log_R"};
  for (size_t i = 0; i < r.sweep_a.size(); ++i) t.rows.push_back({r.sweep_a[i], r.sweep_logR[i]});
  t.meta["R_mag_at_width"] = fmt(r.R_mag);
  t.meta["exponent_fit_c"] = fmt(r.exponent_fit);
  t.meta["fit_residual"] = fmt(r.fit_residual);
  t.meta["phase_dev"] = fmt(r.phase_dev);
  return t;
}

Table run_caustics(const Scenario& sc) {
  const BarrierParams p = barrier_from(sc);
  const int nb = sc.get_int("b_count", 7);
  const double b_lo = sc.get_double("b_min", -0.3);
  const double b_hi = sc.get_double("b_max", 0.3);
  std::vector<double> bs;
  for (int i = 0; i < nb; ++i) bs.push_back(b_lo + (b_hi - b_lo) * double(i) / (nb - 1));
  auto curves = caustic_trajectories(p, bs, sc.get_int("samples", 61));
  Table t;
  t.columns = {"b", "eta", "x", "eta_tangent", "x_tangent"};
  for (const auto& c : curves)
    for (size_t i = 0; i < c.eta.size(); ++i)
      t.rows.push_back({c.b, c.eta[i], c.x[i], c.eta_tangent, c.x_tangent});
  const SingularExpansion se = unfold_cubic(p, 1.0);
  t.meta["tan_theta"] = fmt(se.tan_theta);
  t.meta["x0"] = fmt(se.cusp.x0);
  return t;
}

Table run_crosscheck(const Scenario& sc, const RunOptions& ropt) {
  const BarrierParams p = barrier_from(sc);
  const int n = sc.get_int("grid", 5);
  const double da = sc.get_double("a_span", 0.2);
  const double ds = sc.get_double("alpha0_sq_span", 0.01);
  Table t;
  t.columns = {"alpha0_sq", "a", "A0_plus_A1", "hj_exponent", "rel_diff"};
  t.rows.resize(size_t(n) * n);
  auto cell = [&](int idx) {
    const int i = idx / n, j = idx % n;
    BarrierParams q = p;
    const double s0 = p.alpha0_sq() - ds / 2 + ds * double(i) / (n - 1);
    q.alpha0 = std::sqrt(std::max(1e-6, s0));
    q.a = p.a - da / 2 + da * double(j) / (n - 1);
    const PenetrationResult r = penetration(q);
    const double hj = penetration_exponent_hj(q);
    const double tot = r.A0 + r.A1;
    t.rows[idx] = {q.alpha0_sq(), q.a, tot, hj, std::abs(tot - hj) / std::abs(tot)};
  };
  // rows are indexed, so worker threads cannot affect the output order
  const int jobs = std::max(1, std::min(ropt.jobs, n * n));
  if (jobs == 1) {
    for (int idx = 0; idx < n * n; ++idx) cell(idx);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (int idx = w; idx < n * n; idx += jobs) cell(idx);
      });
    for (auto& th : pool) th.join();
  }
  return t;
}

Table dispatch_kind(const Scenario& sc, const RunOptions& ropt) {
  if (sc.kind == "branches") return run_branches(sc, ropt);
  if (sc.kind == "critical") return run_critical(sc);
  if (sc.kind == "penetration") return run_penetration(sc);
  if (sc.kind == "threshold_sweep") return run_threshold_sweep(sc);
  if (sc.kind == "impurity") return run_impurity(sc);
  if (sc.kind == "stokes1d") return run_stokes1d(sc);
  if (sc.kind == "stokes2d") return run_stokes2d(sc);
  if (sc.kind == "wire_zero_field") return run_wire_zero_field(sc);
  if (sc.kind == "caustics") return run_caustics(sc);
  if (sc.kind == "crosscheck") return run_crosscheck(sc, ropt);
  throw ConfigError("unknown scenario kind '" + sc.kind + "'");
}

Table dispatch(const Scenario& sc, const RunOptions& ropt) {
  Table t = dispatch_kind(sc, ropt);
  if (sc.keys.count("gamma")) {
    if (const auto warning = barrier_from(sc).validate()) t.meta["warning"] = *warning;
  }
  return t;
}

}  // namespace

double Scenario::get_double(const std::string& k, double def) const {
  auto it = keys.find(k);
  if (it == keys.end()) return def;
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("field '" + k + "': cannot parse '" + it->second + "' as a number");
  }
}

double Scenario::require_double(const std::string& k) const {
  if (!keys.count(k)) throw ConfigError("missing required field '" + k + "' in [" + kind + "]");
  return get_double(k, 0.0);
}

int Scenario::get_int(const std::string& k, int def) const {
  const double v = get_double(k, double(def));
  if (v != std::floor(v)) throw ConfigError("field '" + k + "' must be an integer");
  return int(v);
}

bool Scenario::get_bool(const std::string& k, bool def) const {
  auto it = keys.find(k);
  if (it == keys.end()) return def;
  if (it->second == "true") return true;
  if (it->second == "false") return false;
  throw ConfigError("field '" + k + "': expected true/false, got '" + it->second + "'");
}

std::string Scenario::get_string(const std::string& k, const std::string& def) const {
  auto it = keys.find(k);
  return it == keys.end() ? def : it->second;
}

Config parse_config_text(const std::string& text, const std::string& name) {
  Config cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Scenario* cur = nullptr;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(name + ":" + std::to_string(lineno) +
                                             ": malformed section header");
      const std::string sect = trim(s.substr(1, s.size() - 2));
      if (sect != "scenario")
        throw ConfigError(name + ":" + std::to_string(lineno) + ": unknown section [" + sect +
                          "]");
      cfg.scenarios.emplace_back();
      cfg.scenarios.back().line = lineno;
      cur = &cfg.scenarios.back();
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(name + ":" + std::to_string(lineno) + ": expected key = value");
    if (!cur)
      throw ConfigError(name + ":" + std::to_string(lineno) + ": key outside a [scenario]");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError(name + ":" + std::to_string(lineno) + ": empty key or value");
    if (key == "kind")
      cur->kind = val;
    else
      cur->keys[key] = val;
  }
  if (cfg.scenarios.empty()) throw ConfigError(name + ": no [scenario] sections");
  for (const auto& sc : cfg.scenarios) {
    if (sc.kind.empty())
      throw ConfigError(name + ":" + std::to_string(sc.line) + ": scenario without kind");
    if (sc.keys.count("sweep_param")) {
      const auto cnt = sc.keys.find("sweep_count");
      if (cnt == sc.keys.end() || sc.get_int("sweep_count", 0) < 2)
        throw ConfigError(name + ":" + std::to_string(sc.line) +
                          ": sweep_count must be >= 2 when sweep_param is set");
      static const char* known[] = {"a", "alpha0_sq", "gamma", "B", "width"};
      bool okp = false;
      for (const char* kp : known) okp = okp || sc.keys.at("sweep_param") == kp;
      if (!okp)
        throw ConfigError(name + ":" + std::to_string(sc.line) + ": sweep_param '" +
                          sc.keys.at("sweep_param") + "' does not name a parameter");
    }
  }
  return cfg;
}

Config parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::vector<std::string> run_config(const Config& cfg, const RunOptions& opt) {
  std::vector<std::string> written;
  int index = 0;
  for (const auto& sc : cfg.scenarios) {
    ++index;
    const std::string format = sc.get_string("format", "csv");
    std::string file = sc.get_string("output", "");
    if (file.empty())
      file = sc.kind + "_" + std::to_string(index) + (format == "json" ? ".json" : ".csv");
    std::filesystem::create_directories(opt.out_dir);
    const std::string path = (std::filesystem::path(opt.out_dir) / file).string();
    const Table t = dispatch(sc, opt);
    write_table(t, sc, path, format);
    written.push_back(path);
  }
  return written;
}

const std::map<std::string, std::string>& golden_configs() {
  static const std::map<std::string, std::string> g = {
      {"fig2", R"([scenario]
kind = branches
gamma = 0.2
alpha0_sq = 0.03
a = 2.0
B = 30
y = 0.0
x_min = 0.0
x_max = 1.6
output = fig2.csv
)"},
      {"fig3a", R"([scenario]
kind = branches
gamma = 0.2
alpha0_sq = 0.03
a = 2.0
B = 30
y = 0.0
x_min = 0.0
x_max = 1.6
extend_past_folds = true
extension_length = 0.3
output = fig3a.csv
)"},
      {"fig3b", R"([scenario]
kind = branches
gamma = 0.2
alpha0_sq = 0.03
a = 2.0
B = 30
y = 4.0
x_min = 0.02
x_max = 8.0
output = fig3b.csv
)"},
      {"fig4a", R"([scenario]
kind = branches
gamma = 0.2
alpha0_sq = 0.03
a = 1.6
B = 30
y = 0.0
x_min = 0.02
x_max = 1.6
output = fig4a.csv
)"},
      {"fig4b", R"([scenario]
kind = branches
gamma = 0.2
alpha0_sq = 0.03
a = 1.6
B = 30
y = 0.0594
x_min = 0.02
x_max = 2.6
output = fig4b.csv
)"},
      {"fig8", R"([scenario]
kind = stokes2d
gamma = 0.2
alpha0_sq = 0.03
a = 1.6
B = 30
trace_radius = 0.8
output = fig8.csv
)"},
      {"threshold", R"([scenario]
kind = threshold_sweep
gamma = 0.2
alpha0_sq = 0.03
B = 30
sweep_min = 1.9
sweep_max = 3.2
sweep_count = 27
output = threshold.csv
)"},
      {"impurity", R"([scenario]
kind = impurity
k_sq = 0.45
l = 0.8
a_imp = 0.1
u = 4.2e-54
B = 30
x_min = 1.2
x_max = 2.0
samples = 9
output = impurity.csv
)"},
      {"stokes1d", R"([scenario]
kind = stokes1d
E = 1.5
V = 1.0
a = 1.0
output = stokes1d.csv
)"},
      {"crosscheck", R"([scenario]
kind = crosscheck
gamma = 0.2
alpha0_sq = 0.03
a = 2.0
B = 30
grid = 5
output = crosscheck.csv
)"},
  };
  return g;
}

std::vector<std::string> run_goldens(const std::string& out_dir, int jobs) {
  std::vector<std::string> written;
  for (const auto& [name, text] : golden_configs()) {
    const Config cfg = parse_config_text(text, name);
    RunOptions opt;
    opt.out_dir = (std::filesystem::path(out_dir) / name).string();
    opt.jobs = jobs;  // scenarios themselves run sequentially
    std::filesystem::create_directories(opt.out_dir);
    const std::string cfg_path =
        (std::filesystem::path(opt.out_dir) / (name + ".cfg")).string();
    std::ofstream f(cfg_path, std::ios::binary);
    f << text;
    written.push_back(cfg_path);
    auto files = run_config(cfg, opt);
    written.insert(written.end(), files.begin(), files.end());
  }
  return written;
}

}  // namespace wirebarrier
