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

// cavem command-line front end.
//
//   cavem run <config> [--output-dir DIR] [--format csv|json]
//   cavem sweep <config> [--parameter section.key] [--values a,b,c]
//   cavem device <config>
//   cavem list-scenarios [--dir DIR]
//
// Exit codes: 0 ok, 2 configuration error, 3 engine error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cavem/config.hpp"
#include "cavem/device.hpp"
#include "cavem/error.hpp"
#include "cavem/scenario.hpp"
#include "cavem/serialize.hpp"

namespace fs = std::filesystem;
using namespace cavem;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kEngineError = 3;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

void write_outputs(const scenario::RunResult& r, const fs::path& dir,
                   const std::string& stem, const std::string& format) {
  fs::create_directories(dir);
  if (format == "json") {
    write_file(dir / (stem + ".json"), scenario::to_json(r.table));
  } else {
    write_file(dir / (stem + ".csv"), scenario::to_csv(r.table));
  }
  write_file(dir / (stem + ".summary.json"), r.summary_json + "\n");
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

void print_final(const scenario::Table& t) {
  if (t.rows.empty()) return;
  const auto& row = t.rows.back();
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    std::printf("  %-22s %s\n", t.columns[i].c_str(),
                serialize::format_number(row[i]).c_str());
  }
}

int cmd_run(const std::string& path, const std::string& out_dir,
            const std::string& format) {
  const auto doc = config::IniDocument::load(path);
  const auto s = scenario::load_scenario(doc);
  const auto r = scenario::run(s);
  write_outputs(r, out_dir, s.name, format);
  std::printf("%s: %zu rows -> %s\n", s.name.c_str(), r.table.rows.size(),
              out_dir.c_str());
  print_final(r.table);
  return kOk;
}

int cmd_sweep(const std::string& path, std::string parameter,
              std::vector<std::string> values, bool values_given,
              const std::string& out_dir, const std::string& format) {
  const auto doc = config::IniDocument::load(path);
  if (parameter.empty()) parameter = doc.get_string("sweep", "parameter", "");
  if (!values_given) values = doc.get_strings("sweep", "values");
  if (parameter.empty()) {
    throw ConfigError(path + ": no sweep parameter (use --parameter or [sweep] parameter)");
  }
  const auto r = scenario::sweep(doc, parameter, values);
  const std::string name = doc.get_string("scenario", "name", "sweep");
  write_outputs(r, out_dir, name + ".sweep", format);
  std::printf("%s: sweep over %s, %zu rows -> %s\n", name.c_str(),
              parameter.c_str(), r.table.rows.size(), out_dir.c_str());
  return kOk;
}

int cmd_device(const std::string& path) {
  const auto doc = config::IniDocument::load(path);
  const auto p = config::load_device(doc);
  const auto s = device::summarize(p, config::device_threshold(doc));
  constexpr double kTwoPi = 6.283185307179586;
  auto line = [](const char* name, double rad, const char* note = "") {
    std::printf("  %-16s %14.6g rad/s  %14.6g Hz%s\n", name, rad, rad / kTwoPi, note);
  };
  std::printf("%s\n", path.c_str());
  line("g_1", s.g[0]);
  line("g_2", s.g[1]);
  line("Theta_1", s.theta[0]);
  line("Theta_2", s.theta[1]);
  line("gamma_m", s.gamma_m);
  line("kappa", s.kappa);
  line("Gamma_c", s.engineered_rate);
  std::printf("  %-16s %14.6g\n", "n_th", s.n_th);
  std::printf("  %-16s %14.6g s\n", "T_pi", s.half_period);
  auto verdicts = [&](const char* scheme, bool ok,
                      const std::vector<device::Margin>& ms) {
    std::printf("  scheme %s: %s (threshold %g)\n", scheme, ok ? "ok" : "violated",
                s.regime.threshold);
    for (const auto& m : ms) {
      std::printf("    %-34s %12.4g  %s\n", m.name.c_str(), m.ratio,
                  m.pass ? "pass" : "fail");
    }
  };
  verdicts("A", s.regime.scheme_a_ok, s.regime.scheme_a);
  verdicts("B", s.regime.scheme_b_ok, s.regime.scheme_b);
  return kOk;
}

int cmd_list(const std::string& dir) {
  std::vector<fs::path> files;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.path().extension() == ".cfg") files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string desc;
    try {
      const auto doc = config::IniDocument::load(f.string());
      desc = doc.get_string("scenario", "description", "");
    } catch (const ConfigError&) {
      desc = "(unreadable)";
    }
    std::printf("%-28s %s\n", f.filename().string().c_str(), desc.c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavem: cavity electromechanics entanglement simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::string parameter;
  std::vector<std::string> values;
  std::string scenario_dir = CAVEM_SCENARIO_DIR;

  auto* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("config", config_path, "Scenario file")->required();
  run->add_option("--output-dir", out_dir, "Directory for results");
  run->add_option("--format", format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* sw = app.add_subcommand("sweep", "Run a scenario for each parameter value");
  sw->add_option("config", config_path, "Scenario file")->required();
  sw->add_option("--parameter", parameter, "Parameter path, section.key");
  auto* values_opt = sw->add_option("--values", values, "Comma-separated values")
                         ->delimiter(',');
  sw->add_option("--output-dir", out_dir, "Directory for results");
  sw->add_option("--format", format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* dev = app.add_subcommand("device", "Evaluate device parameters");
  dev->add_option("config", config_path, "Device file")->required();

  auto* list = app.add_subcommand("list-scenarios", "List bundled scenarios");
  list->add_option("--dir", scenario_dir, "Scenario directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir, format);
    if (*sw) {
      return cmd_sweep(config_path, parameter, values, values_opt->count() > 0,
                       out_dir, format);
    }
    if (*dev) return cmd_device(config_path);
    if (*list) return cmd_list(scenario_dir);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return kEngineError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngineError;
  }
  return kOk;
}
