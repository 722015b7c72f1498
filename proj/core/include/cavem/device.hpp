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

#include <array>
#include <string>
#include <vector>

namespace cavem::device {

inline constexpr double kHbar = 1.054571817e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;  // J / K

/// SI parameters; angular frequencies in rad/s.
struct DeviceParams {
  double c0 = 0.0;       // F, equilibrium coupling capacitance
  double d = 0.0;        // m, equilibrium gap
  double mass = 0.0;     // kg
  double omega_m = 0.0;  // rad/s
  std::array<double, 2> omega{};  // rad/s, cavity j
  std::array<double, 2> cap{};    // F, cavity j
  std::array<double, 2> vx{};     // V, drive amplitude per tone
  double q_m = 0.0;
  double q_c = 0.0;
  double temperature = 0.0;  // K

  void validate() const;
};

/// g_j = (C0 / d) sqrt(omega_j / (2 m omega_m C_j)) Vx, in rad/s.
double coupling_g(const DeviceParams& p, int j, double vx_instant);

/// Theta_j = g_j(Vx_j) / 2.
double effective_theta(const DeviceParams& p, int j);

/// Bose-Einstein occupation; 0 at T = 0.
double thermal_occupation(double omega_m, double temperature);

struct Margin {
  std::string name;
  double ratio = 0.0;  // +inf when the right-hand side vanishes
  bool pass = false;
};

struct RegimeReport {
  bool scheme_a_ok = false;
  bool scheme_b_ok = false;
  double threshold = 10.0;
  std::vector<Margin> scheme_a;
  std::vector<Margin> scheme_b;
};

/// Scheme A: min(theta) >> {kappa, n_th gamma_m, gamma_m}.
/// Scheme B: gamma_m >> max(theta) and min(theta) >> sqrt(gamma_m kappa) / 2.
RegimeReport regime_check(double theta1, double theta2, double gamma_m,
                          double kappa, double n_th, double threshold = 10.0);

struct DeviceSummary {
  std::array<double, 2> g{};
  std::array<double, 2> theta{};
  double gamma_m = 0.0;
  double kappa = 0.0;
  double n_th = 0.0;
  double engineered_rate = 0.0;  // NaN unless theta2 > theta1
  double half_period = 0.0;      // NaN unless theta2 > theta1
  RegimeReport regime;
};

DeviceSummary summarize(const DeviceParams& p, double threshold = 10.0);

}  // namespace cavem::device
