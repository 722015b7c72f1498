// Copyright 2026 The cavem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cavem/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "cavem/closedform.hpp"
#include "cavem/error.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/lindblad.hpp"
#include "cavem/metrics.hpp"
#include "cavem/serialize.hpp"
#include "json.hpp"

namespace cavem::scenario {

namespace {

using nlohmann::json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kFockFidelityTail = 1e-4;

const std::map<std::string, std::vector<std::string>>& schema() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"scenario", {"name", "engine", "description"}},
      {"system",
       {"kind", "theta1", "theta2", "r", "gamma_m", "gamma_m2", "n_th",
        "kappa", "kappa1", "kappa2", "include_dtilde"}},
      {"initial", {"state", "n_c1", "n_c2", "n_m", "n_m1", "n_m2"}},
      {"time", {"t_max", "unit", "samples"}},
      {"solver",
       {"step", "method", "dims", "representation", "delta_t_rate"}},
      {"metrics", {"pair", "fidelity_zeta", "fidelity_sign"}},
      {"sweep", {"parameter", "values"}},
  };
  return s;
}

template <typename E>
E choose(const config::IniDocument& doc, const std::string& section,
         const std::string& key, const std::map<std::string, E>& options,
         E fallback) {
  if (!doc.has(section, key)) return fallback;
  const auto& v = doc.at(section, key).value;
  const auto it = options.find(v);
  if (it == options.end()) {
    std::ostringstream msg;
    msg << doc.where(section, key) << ": unknown value '" << v
        << "' (expected one of:";
    for (const auto& [name, e] : options) msg << ' ' << name;
    msg << ')';
    throw ConfigError(msg.str());
  }
  return it->second;
}

void require(bool ok, const Scenario& s, const std::string& what) {
  if (!ok) throw ConfigError(s.source + ": " + what);
}

double nonneg(const config::IniDocument& doc, const std::string& section,
              const std::string& key, double fallback) {
  const double v = doc.get_double(section, key, fallback);
  if (!(v >= 0.0)) {
    throw ConfigError(doc.where(section, key) + ": must be >= 0");
  }
  return v;
}

std::vector<double> linspace(double t_max, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (n - 1);
  return t;
}

bool is_dissipative(const Scenario& s) {
  return s.gamma_m > 0.0 || s.kappa1 > 0.0 || s.kappa2 > 0.0;
}

struct Metrics {
  metrics::DuanResult duan;
  double fidelity = kNaN;
  std::vector<double> occupations;
  double purity = kNaN;
};

std::vector<double> row_of(double t, const Metrics& m) {
  std::vector<double> row = {t, m.duan.v_minus, m.duan.v_plus, m.duan.v_min,
                             m.fidelity};
  row.insert(row.end(), m.occupations.begin(), m.occupations.end());
  row.push_back(m.purity);
  return row;
}

class Evaluator {
 public:
  explicit Evaluator(const Scenario& s) : s_(s), labels_(s.labels()) {
    const auto find = [&](const std::string& l) {
      const auto it = std::find(labels_.begin(), labels_.end(), l);
      if (it == labels_.end()) {
        throw ConfigError(s.source + ": [metrics] pair names unknown mode '" +
                          l + "'");
      }
      return static_cast<std::size_t>(it - labels_.begin());
    };
    i1_ = find(s.pair.first);
    i2_ = find(s.pair.second);
    if (i1_ == i2_) throw ConfigError(s.source + ": [metrics] pair repeats a mode");
    zeta_ = s.target_zeta();
  }

  Metrics operator()(const gaussian::GaussianState& g) const {
    Metrics m;
    m.duan = metrics::duan_variance(g, i1_, i2_);
    const std::vector<std::size_t> idx = {i1_, i2_};
    const auto red = g.reduced(idx);
    if (red.mean.cwiseAbs().maxCoeff() <= 1e-6) {
      m.fidelity = metrics::fidelity_with_tmsv(red, zeta_, s_.fidelity_sign);
    }
    m.occupations = metrics::occupations(g);
    m.purity = metrics::purity(red);
    return m;
  }

  Metrics operator()(const fock::QuantumState& state) const {
    Metrics m;
    m.duan = metrics::duan_variance(state, s_.pair.first, s_.pair.second);
    const std::vector<std::string> keep = {s_.pair.first, s_.pair.second};
    const auto red = state.space().num_modes() == 2 && i1_ < i2_
                         ? state
                         : fock::partial_trace(state, keep);
    // partial_trace keeps parent order; the fidelity target is symmetric.
    m.fidelity = metrics::fidelity_with_tmsv(red, zeta_, s_.fidelity_sign,
                                             kFockFidelityTail);
    m.occupations = metrics::occupations(state);
    m.purity = metrics::purity(red);
    return m;
  }

  std::vector<std::string> columns() const {
    std::vector<std::string> c = {"t", "v_minus", "v_plus", "v_min", "fidelity"};
    for (const auto& l : labels_) c.push_back("n_" + l);
    c.push_back("purity");
    return c;
  }

 private:
  const Scenario& s_;
  std::vector<std::string> labels_;
  std::size_t i1_ = 0;
  std::size_t i2_ = 1;
  double zeta_ = 0.0;
};

gaussian::GaussianState initial_gaussian(const Scenario& s) {
  std::vector<double> n;
  for (const auto& l : s.labels()) {
    const auto it = s.occupations.find(l);
    n.push_back(it == s.occupations.end() ? 0.0 : it->second);
  }
  return gaussian::GaussianState::thermal(n);
}

fock::QuantumState initial_fock(const Scenario& s, const fock::FockSpace& space) {
  std::vector<double> n;
  for (const auto& l : s.labels()) {
    const auto it = s.occupations.find(l);
    n.push_back(it == s.occupations.end() ? 0.0 : it->second);
  }
  return fock::thermal_state(space, n);
}

json metrics_json(const std::vector<std::string>& cols,
                  const std::vector<double>& row) {
  json j = json::object();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    j[cols[i]] = std::isfinite(row[i]) ? json(row[i])
                                       : json(serialize::format_number(row[i]));
  }
  return j;
}

json num(double x) {
  return std::isfinite(x) ? json(x) : json(serialize::format_number(x));
}

bool is_scheme_a_unitary(const Scenario& s) {
  return s.system == SystemKind::kSchemeA && !is_dissipative(s);
}

struct Extras {
  double v_min_half_period = kNaN;
  double v_min_steady = kNaN;
  double fidelity_steady = kNaN;
  std::optional<bool> hurwitz;
};

RunResult finish(const Scenario& s, Table table, json summary,
                 std::vector<std::string> warnings, const Extras& extras) {
  summary["name"] = s.name;
  summary["rows"] = table.rows.size();
  if (!table.rows.empty()) {
    summary["final"] = metrics_json(table.columns, table.rows.back());
  }
  summary["time_scale"] = s.time_scale();
  summary["v_min_at_half_period"] = num(extras.v_min_half_period);
  json steady = json::object();
  if (extras.hurwitz) steady["hurwitz"] = *extras.hurwitz;
  steady["v_min"] = num(extras.v_min_steady);
  steady["fidelity"] = num(extras.fidelity_steady);
  summary["steady"] = std::move(steady);
  summary["warnings"] = warnings;
  return {std::move(table), summary.dump(2), std::move(warnings)};
}

RunResult run_closedform(const Scenario& s) {
  const Evaluator eval(s);
  const auto g0 = initial_gaussian(s);
  Table table{eval.columns(), {}};
  for (double t : linspace(s.t_max * s.time_scale(), s.samples)) {
    const auto map = closedform::propagator(s.theta1, s.theta2, t);
    table.rows.push_back(row_of(t, eval(closedform::apply_to_gaussian(map, g0))));
  }
  Extras extras;
  const double tp = closedform::half_period(s.theta1, s.theta2);
  extras.v_min_half_period =
      eval(closedform::apply_to_gaussian(
               closedform::propagator(s.theta1, s.theta2, tp), g0))
          .duan.v_min;
  json summary = {{"engine", "closedform"}, {"half_period", tp}};
  return finish(s, std::move(table), std::move(summary), {}, extras);
}

RunResult run_gaussian(const Scenario& s) {
  const Evaluator eval(s);
  const auto spec = s.build_system();
  const auto dd = gaussian::drift_diffusion(spec);
  const auto g0 = initial_gaussian(s);
  gaussian::MomentOptions opts;
  if (s.step) opts.step = *s.step;
  const auto grid = linspace(s.t_max * s.time_scale(), s.samples);
  const auto states = gaussian::evolve_moments(dd, g0, grid, opts);
  Table table{eval.columns(), {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.rows.push_back(row_of(grid[i], eval(states[i])));
  }
  Extras extras;
  json summary = {{"engine", "gaussian"}};
  if (s.system == SystemKind::kSchemeA || s.system == SystemKind::kSchemeAPrime) {
    const double tp = closedform::half_period(s.theta1, s.theta2);
    const std::vector<double> at = {tp};
    extras.v_min_half_period =
        eval(gaussian::evolve_moments(dd, g0, at, opts).front()).duan.v_min;
    summary["half_period"] = tp;
  }
  extras.hurwitz = gaussian::is_hurwitz(dd.drift);
  if (*extras.hurwitz) {
    const auto ss = gaussian::lyapunov_steady(dd);
    const auto m = eval(ss);
    extras.v_min_steady = m.duan.v_min;
    extras.fidelity_steady = m.fidelity;
  }
  return finish(s, std::move(table), std::move(summary), {}, extras);
}

json fock_diagnostics(const lindblad::EvolutionResult& r) {
  double drift = 0.0;
  double top = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  for (const auto& d : r.diagnostics) {
    drift = std::max(drift, d.trace_drift);
    top = std::max(top, d.top_level_population);
    if (std::isfinite(d.min_eigenvalue)) min_eig = std::min(min_eig, d.min_eigenvalue);
  }
  return {{"max_trace_drift", drift},
          {"max_top_level_population", top},
          {"min_eigenvalue", num(min_eig)}};
}

fock::FockSpace fock_space(const Scenario& s) {
  const auto labels = s.labels();
  require(s.dims.size() == labels.size(), s,
          "[solver] dims must list one truncation per mode");
  return fock::FockSpace(s.dims, labels);
}

lindblad::SolverOptions fock_options(const Scenario& s) {
  lindblad::SolverOptions opts;
  opts.step = s.step;
  if (s.method == "exponential") {
    opts.method = lindblad::Method::kExponential;
  } else if (s.method == "etd" ||
             (s.method.empty() && s.engine == Engine::kAdiabatic)) {
    opts.method = lindblad::Method::kEtdRk4;
  }
  opts.sample_stride = 8;
  return opts;
}

RunResult run_fock(const Scenario& s) {
  const Evaluator eval(s);
  const auto space = fock_space(s);
  const auto sys = model::compile(s.build_system(), space);
  const auto grid = linspace(s.t_max * s.time_scale(), s.samples);
  const auto r = lindblad::evolve(sys, initial_fock(s, space), grid, fock_options(s));
  Table table{eval.columns(), {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.rows.push_back(row_of(grid[i], eval(r.states[i])));
  }
  json summary = {{"engine", "fock"}, {"diagnostics", fock_diagnostics(r)}};
  return finish(s, std::move(table), std::move(summary), r.warnings, {});
}

std::vector<std::size_t> cycle_samples(int n_cycles, int samples) {
  std::vector<std::size_t> out;
  const int stride = std::max(1, n_cycles / std::max(1, samples - 1));
  for (int c = stride; c < n_cycles; c += stride) out.push_back(static_cast<std::size_t>(c - 1));
  if (n_cycles > 0) out.push_back(static_cast<std::size_t>(n_cycles - 1));
  return out;
}

RunResult run_stroboscopic(const Scenario& s) {
  const Evaluator eval(s);
  const double rate = s.engineered_rate();
  const double delta_t = s.delta_t_rate / rate;
  const double t_end = s.t_max * s.time_scale();
  const int n_cycles = static_cast<int>(std::llround(t_end / (2.0 * delta_t)));
  require(n_cycles >= 1, s, "stroboscopic run shorter than one cycle");
  const auto spec_a = model::with_dissipation(model::scheme_a(s.theta1, s.theta2),
                                              s.kappa1, s.kappa2, s.gamma_m, s.n_th);
  const auto spec_b = model::with_dissipation(
      model::scheme_a_prime(s.theta1, s.theta2), s.kappa1, s.kappa2, s.gamma_m, s.n_th);
  Table table{eval.columns(), {}};
  std::vector<std::string> warnings;
  if (s.delta_t_rate > 0.1) {
    std::ostringstream msg;
    msg << "delta_t * rate = " << s.delta_t_rate
        << " > 0.1; the alternation may not follow the effective dynamics";
    warnings.push_back(msg.str());
  }
  json summary = {{"engine", "stroboscopic"},
                  {"delta_t", delta_t},
                  {"cycles", n_cycles},
                  {"engineered_rate", rate}};
  const auto picks = cycle_samples(n_cycles, s.samples);
  if (s.representation == Representation::kGaussian) {
    summary["representation"] = "gaussian";
    const auto g0 = initial_gaussian(s);
    gaussian::MomentOptions opts;
    if (s.step) opts.step = *s.step;
    const auto states = gaussian::stroboscopic_moments(
        gaussian::drift_diffusion(spec_a), gaussian::drift_diffusion(spec_b),
        delta_t, n_cycles, g0, opts);
    table.rows.push_back(row_of(0.0, eval(g0)));
    for (auto c : picks) {
      table.rows.push_back(row_of(2.0 * delta_t * static_cast<double>(c + 1), eval(states[c])));
    }
    return finish(s, std::move(table), std::move(summary), warnings, {});
  }
  summary["representation"] = "fock";
  const auto space = fock_space(s);
  const auto sys_a = model::compile(spec_a, space);
  const auto sys_b = model::compile(spec_b, space);
  auto opts = fock_options(s);
  opts.effective_rate = rate;
  const auto rho0 = initial_fock(s, space);
  const auto r = lindblad::stroboscopic_evolve(sys_a.hamiltonian, sys_b.hamiltonian,
                                               sys_a.jumps, delta_t, n_cycles, rho0, opts);
  table.rows.push_back(row_of(0.0, eval(rho0)));
  for (auto c : picks) table.rows.push_back(row_of(r.times[c], eval(r.states[c])));
  summary["diagnostics"] = fock_diagnostics(r);
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  return finish(s, std::move(table), std::move(summary), warnings, {});
}

RunResult run_adiabatic(const Scenario& s) {
  const auto grid = linspace(s.t_max * s.time_scale(), s.samples);
  const auto report = lindblad::adiabatic_equivalence_check(
      s.theta1, s.theta2, s.gamma_m, grid, s.dims, fock_options(s));
  Table table{{"t", "trace_distance"}, {}};
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    table.rows.push_back({report.times[i], report.distances[i]});
  }
  json summary = {{"engine", "adiabatic"},
                  {"max_trace_distance", report.max_trace_distance},
                  {"time_of_max", report.time_of_max},
                  {"engineered_rate", report.engineered_rate}};
  return finish(s, std::move(table), std::move(summary), {}, {});
}

}  // namespace

std::vector<std::string> Scenario::labels() const {
  switch (system) {
    case SystemKind::kSchemeA:
    case SystemKind::kSchemeAPrime:
      return {"c1", "c2", "m"};
    case SystemKind::kEffectiveCooling:
      return {"c1", "c2"};
    case SystemKind::kTwoMr:
      return {"c1", "c2", "m1", "m2"};
  }
  return {};
}

model::SystemSpec Scenario::build_system() const {
  try {
    switch (system) {
      case SystemKind::kSchemeA:
      case SystemKind::kSchemeAPrime: {
        auto spec = system == SystemKind::kSchemeA
                        ? model::scheme_a(theta1, theta2)
                        : model::scheme_a_prime(theta1, theta2);
        if (is_dissipative(*this)) {
          spec = model::with_dissipation(std::move(spec), kappa1, kappa2, gamma_m, n_th);
        }
        return spec;
      }
      case SystemKind::kEffectiveCooling:
        return model::effective_cooling(theta1, theta2, gamma_m, include_dtilde);
      case SystemKind::kTwoMr:
        return model::two_mr_system(theta1, theta2, gamma_m, gamma_m2, n_th,
                                    kappa1, kappa2);
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(source + ": [system] " + e.what());
  }
  throw ConfigError(source + ": [system] unsupported kind");
}

double Scenario::engineered_rate() const {
  if (!(gamma_m > 0.0)) {
    throw ConfigError(source + ": engineered rate needs gamma_m > 0");
  }
  return model::engineered_rate(theta1, theta2, gamma_m);
}

double Scenario::time_scale() const {
  switch (unit) {
    case TimeUnit::kAbsolute: return 1.0;
    case TimeUnit::kHalfPeriod: return closedform::half_period(theta1, theta2);
    case TimeUnit::kTheta1: return 1.0 / theta1;
    case TimeUnit::kRate: return 1.0 / engineered_rate();
  }
  return 1.0;
}

double Scenario::target_zeta() const {
  if (fidelity_zeta) return *fidelity_zeta;
  if (is_scheme_a_unitary(*this)) {
    return closedform::squeeze_parameter(theta1, theta2, closedform::Scheme::kA);
  }
  return closedform::squeeze_parameter(theta1, theta2, closedform::Scheme::kB);
}

bool is_parameter(const std::string& path) {
  const auto dot = path.find('.');
  if (dot == std::string::npos) return false;
  const auto it = schema().find(path.substr(0, dot));
  if (it == schema().end() || it->first == "sweep") return false;
  const auto key = path.substr(dot + 1);
  return std::find(it->second.begin(), it->second.end(), key) != it->second.end();
}

Scenario load_scenario(const config::IniDocument& doc) {
  doc.require_known(schema());
  Scenario s;
  s.source = doc.source();
  s.name = doc.get_string("scenario", "name", "");
  if (s.name.empty()) throw ConfigError(doc.source() + ": missing key 'name' in [scenario]");
  if (s.name.find_first_of("/\\ ") != std::string::npos) {
    throw ConfigError(doc.where("scenario", "name") + ": name must not contain '/', '\\' or spaces");
  }
  s.engine = choose<Engine>(doc, "scenario", "engine",
                            {{"closedform", Engine::kClosedForm},
                             {"gaussian", Engine::kGaussian},
                             {"fock", Engine::kFock},
                             {"stroboscopic", Engine::kStroboscopic},
                             {"adiabatic", Engine::kAdiabatic}},
                            Engine::kGaussian);
  s.system = choose<SystemKind>(doc, "system", "kind",
                                {{"scheme_a", SystemKind::kSchemeA},
                                 {"scheme_a_prime", SystemKind::kSchemeAPrime},
                                 {"effective_cooling", SystemKind::kEffectiveCooling},
                                 {"two_mr", SystemKind::kTwoMr}},
                                SystemKind::kSchemeA);
  s.theta1 = nonneg(doc, "system", "theta1", 1.0);
  if (doc.has("system", "r") && doc.has("system", "theta2")) {
    throw ConfigError(doc.where("system", "r") + ": give either r or theta2, not both");
  }
  s.theta2 = doc.has("system", "r") ? s.theta1 * doc.get_double("system", "r", 0.0)
                                    : nonneg(doc, "system", "theta2", 2.0);
  s.gamma_m = nonneg(doc, "system", "gamma_m", 0.0);
  s.gamma_m2 = nonneg(doc, "system", "gamma_m2", s.gamma_m);
  s.n_th = nonneg(doc, "system", "n_th", 0.0);
  const double kappa = nonneg(doc, "system", "kappa", 0.0);
  s.kappa1 = nonneg(doc, "system", "kappa1", kappa);
  s.kappa2 = nonneg(doc, "system", "kappa2", kappa);
  s.include_dtilde = doc.get_bool("system", "include_dtilde", true);

  const std::string state = doc.get_string("initial", "state", "vacuum");
  if (state != "vacuum" && state != "thermal") {
    throw ConfigError(doc.where("initial", "state") + ": expected vacuum or thermal");
  }
  const auto labels = s.labels();
  for (const auto& key : doc.keys("initial")) {
    if (key.rfind("n_", 0) != 0) continue;
    const std::string label = key.substr(2);
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      throw ConfigError(doc.where("initial", key) + ": system has no mode '" + label + "'");
    }
    if (state == "vacuum") {
      throw ConfigError(doc.where("initial", key) + ": occupations need state = thermal");
    }
    s.occupations[label] = nonneg(doc, "initial", key, 0.0);
  }

  s.t_max = doc.get_double("time", "t_max", 1.0);
  if (!(s.t_max > 0.0)) throw ConfigError(doc.source() + ": [time] t_max must be positive");
  s.unit = choose<TimeUnit>(doc, "time", "unit",
                            {{"absolute", TimeUnit::kAbsolute},
                             {"half_period", TimeUnit::kHalfPeriod},
                             {"theta1", TimeUnit::kTheta1},
                             {"rate", TimeUnit::kRate}},
                            TimeUnit::kAbsolute);
  s.samples = doc.get_int("time", "samples", 101);
  if (s.samples < 2) throw ConfigError(doc.where("time", "samples") + ": need at least 2");

  if (doc.has("solver", "step") && doc.at("solver", "step").value != "auto") {
    s.step = doc.get_double("solver", "step", 0.0);
    if (!(*s.step > 0.0)) throw ConfigError(doc.where("solver", "step") + ": must be positive");
  }
  s.method = doc.get_string("solver", "method", "");
  if (!s.method.empty() && s.method != "rk4" && s.method != "etd" &&
      s.method != "exponential") {
    throw ConfigError(doc.where("solver", "method") +
                      ": expected rk4, etd or exponential");
  }
  for (double d : doc.get_doubles("solver", "dims")) {
    if (d < 1.0 || d != std::floor(d)) {
      throw ConfigError(doc.where("solver", "dims") + ": dims must be positive integers");
    }
    s.dims.push_back(static_cast<int>(d));
  }
  s.representation = choose<Representation>(
      doc, "solver", "representation",
      {{"gaussian", Representation::kGaussian}, {"fock", Representation::kFock}},
      Representation::kGaussian);
  s.delta_t_rate = doc.get_double("solver", "delta_t_rate", 0.01);
  if (!(s.delta_t_rate > 0.0)) {
    throw ConfigError(doc.where("solver", "delta_t_rate") + ": must be positive");
  }

  const auto pair = doc.get_strings("metrics", "pair");
  if (!pair.empty()) {
    if (pair.size() != 2) throw ConfigError(doc.where("metrics", "pair") + ": need two labels");
    s.pair = {pair[0], pair[1]};
  }
  if (doc.has("metrics", "fidelity_zeta")) s.fidelity_zeta = nonneg(doc, "metrics", "fidelity_zeta", 0.0);
  s.fidelity_sign = doc.get_int("metrics", "fidelity_sign", -1);
  if (s.fidelity_sign != 1 && s.fidelity_sign != -1) {
    throw ConfigError(doc.where("metrics", "fidelity_sign") + ": must be +1 or -1");
  }

  // Compatibility checks, so that nothing runs on a bad configuration.
  require(s.theta2 > s.theta1 && s.theta1 > 0.0, s,
          "[system] requires theta2 > theta1 > 0");
  s.build_system();
  if (s.engine == Engine::kClosedForm) {
    require(s.system == SystemKind::kSchemeA && !is_dissipative(s), s,
            "engine closedform needs kind = scheme_a without dissipation");
  }
  if (s.engine == Engine::kStroboscopic) {
    require(s.system == SystemKind::kSchemeA, s,
            "engine stroboscopic alternates scheme_a and scheme_a_prime; use kind = scheme_a");
    require(s.gamma_m > 0.0, s, "engine stroboscopic needs gamma_m > 0");
  }
  if (s.engine == Engine::kAdiabatic) {
    require(s.system == SystemKind::kSchemeA && s.gamma_m > 0.0 &&
                s.kappa1 == 0.0 && s.kappa2 == 0.0 && s.n_th == 0.0 &&
                s.occupations.empty(),
            s, "engine adiabatic needs kind = scheme_a with gamma_m > 0, "
               "no cavity damping, n_th = 0 and a vacuum start");
    require(s.dims.size() == 3, s, "[solver] dims must list c1, c2, m");
  }
  const bool uses_fock = s.engine == Engine::kFock ||
                         (s.engine == Engine::kStroboscopic &&
                          s.representation == Representation::kFock);
  if (uses_fock) {
    require(s.dims.size() == labels.size(), s,
            "[solver] dims must list one truncation per mode");
  }
  if (s.system == SystemKind::kEffectiveCooling || s.unit == TimeUnit::kRate) {
    require(s.gamma_m > 0.0, s, "this system needs gamma_m > 0");
  }
  s.time_scale();
  s.target_zeta();
  Evaluator check(s);
  (void)check;
  return s;
}

RunResult run(const Scenario& s) {
  switch (s.engine) {
    case Engine::kClosedForm: return run_closedform(s);
    case Engine::kGaussian: return run_gaussian(s);
    case Engine::kFock: return run_fock(s);
    case Engine::kStroboscopic: return run_stroboscopic(s);
    case Engine::kAdiabatic: return run_adiabatic(s);
  }
  throw ConfigError("unknown engine");
}

RunResult sweep(const config::IniDocument& doc, const std::string& parameter,
                const std::vector<std::string>& values, int threads) {
  if (!is_parameter(parameter)) {
    throw ConfigError(doc.source() + ": unknown sweep parameter '" + parameter + "'");
  }
  if (values.empty()) throw ConfigError(doc.source() + ": sweep needs at least one value");
  std::vector<Scenario> scenarios;
  std::vector<double> numeric;
  for (const auto& v : values) {
    try {
      numeric.push_back(config::parse_number(v));
    } catch (const ConfigError&) {
      throw ConfigError(doc.source() + ": sweep value '" + v + "' is not a number");
    }
    auto copy = doc;
    copy.set(parameter, v);
    scenarios.push_back(load_scenario(copy));
  }

  std::vector<RunResult> results(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      try {
        results[i] = run(scenarios[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(scenarios.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const std::string& column = parameter;
  Table table;
  table.columns.push_back(column);
  const auto& base_cols = results.front().table.columns;
  table.columns.insert(table.columns.end(), base_cols.begin(), base_cols.end());
  table.columns.push_back("v_min_at_half_period");
  table.columns.push_back("v_min_steady");
  json rows = json::array();
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.table.columns != base_cols) {
      throw ConfigError(doc.source() + ": sweep values change the output columns");
    }
    const json summary = json::parse(r.summary_json);
    auto to_double = [](const json& j) {
      return j.is_number() ? j.get<double>() : kNaN;
    };
    std::vector<double> row = {numeric[i]};
    row.insert(row.end(), r.table.rows.back().begin(), r.table.rows.back().end());
    row.push_back(to_double(summary.at("v_min_at_half_period")));
    row.push_back(to_double(summary.at("steady").at("v_min")));
    table.rows.push_back(std::move(row));
    rows.push_back(summary);
    for (const auto& w : r.warnings) warnings.push_back(values[i] + ": " + w);
  }
  json summary = {{"name", scenarios.front().name},
                  {"parameter", parameter},
                  {"values", values},
                  {"runs", rows},
                  {"warnings", warnings}};
  return {std::move(table), summary.dump(2), std::move(warnings)};
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += serialize::format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(metrics_json(t.columns, row));
  return json{{"columns", t.columns}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace cavem::scenario
