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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cavem/config.hpp"
#include "cavem/model.hpp"

namespace cavem::scenario {

enum class Engine { kClosedForm, kGaussian, kFock, kStroboscopic, kAdiabatic };
enum class SystemKind { kSchemeA, kSchemeAPrime, kEffectiveCooling, kTwoMr };
enum class TimeUnit { kAbsolute, kHalfPeriod, kTheta1, kRate };
enum class Representation { kGaussian, kFock };

struct Scenario {
  std::string name;
  std::string source;
  Engine engine = Engine::kGaussian;
  SystemKind system = SystemKind::kSchemeA;
  double theta1 = 1.0;
  double theta2 = 2.0;
  double gamma_m = 0.0;
  double gamma_m2 = 0.0;
  double n_th = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  bool include_dtilde = true;
  std::map<std::string, double> occupations;  // initial thermal, per label
  double t_max = 1.0;
  TimeUnit unit = TimeUnit::kAbsolute;
  int samples = 101;
  std::optional<double> step;
  std::string method;  // rk4 | etd | exponential; empty = engine default
  std::vector<int> dims;
  Representation representation = Representation::kGaussian;
  double delta_t_rate = 0.01;  // stroboscopic delta_t * Gamma_c
  std::pair<std::string, std::string> pair{"c1", "c2"};
  std::optional<double> fidelity_zeta;
  int fidelity_sign = -1;

  /// Physical system; throws ConfigError on incompatible settings.
  model::SystemSpec build_system() const;
  std::vector<std::string> labels() const;
  /// Absolute time corresponding to one `unit`.
  double time_scale() const;
  double engineered_rate() const;
  double target_zeta() const;
};

/// Parses and validates; every problem is a ConfigError.
Scenario load_scenario(const config::IniDocument& doc);

/// True if "section.key" is part of the scenario schema.
bool is_parameter(const std::string& path);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunResult {
  Table table;
  std::string summary_json;
  std::vector<std::string> warnings;
};

RunResult run(const Scenario& s);

/// One row per value, in the order given; `threads` <= 0 uses the hardware
/// concurrency. All configurations are validated before any run starts.
RunResult sweep(const config::IniDocument& doc, const std::string& parameter,
                const std::vector<std::string>& values, int threads = 0);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

}  // namespace cavem::scenario
