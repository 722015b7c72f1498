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

#include "cavem/device.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cavem/error.hpp"

namespace cavem::device {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "device: " << what << " must be positive (got " << x << ")";
    throw InvalidArgument(msg.str());
  }
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "device: " << what << " must be >= 0 (got " << x << ")";
    throw InvalidArgument(msg.str());
  }
}

std::size_t cavity_index(int j) {
  if (j != 1 && j != 2) throw InvalidArgument("device: cavity index must be 1 or 2");
  return static_cast<std::size_t>(j - 1);
}

Margin margin(std::string name, double lhs, double rhs, double threshold) {
  const double ratio =
      rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
  return {std::move(name), ratio, ratio >= threshold};
}

}  // namespace

void DeviceParams::validate() const {
  require_positive(c0, "C0");
  require_positive(d, "d");
  require_positive(mass, "m");
  require_positive(omega_m, "omega_m");
  for (std::size_t j = 0; j < 2; ++j) {
    require_positive(omega[j], "omega_j");
    require_positive(cap[j], "C_j");
    require_positive(vx[j], "Vx_j");
  }
  require_positive(q_m, "Q_m");
  require_positive(q_c, "Q_c");
  require_nonnegative(temperature, "T");
}

double coupling_g(const DeviceParams& p, int j, double vx_instant) {
  p.validate();
  require_positive(vx_instant, "Vx");
  const std::size_t k = cavity_index(j);
  return (p.c0 / p.d) *
         std::sqrt(p.omega[k] / (2.0 * p.mass * p.omega_m * p.cap[k])) *
         vx_instant;
}

double effective_theta(const DeviceParams& p, int j) {
  return 0.5 * coupling_g(p, j, p.vx[cavity_index(j)]);
}

double thermal_occupation(double omega_m, double temperature) {
  require_positive(omega_m, "omega_m");
  require_nonnegative(temperature, "T");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(kHbar * omega_m / (kBoltzmann * temperature));
}

RegimeReport regime_check(double theta1, double theta2, double gamma_m,
                          double kappa, double n_th, double threshold) {
  for (double x : {theta1, theta2, gamma_m, kappa, n_th}) {
    require_nonnegative(x, "regime_check input");
  }
  require_positive(threshold, "threshold");
  const double lo = std::min(theta1, theta2);
  const double hi = std::max(theta1, theta2);
  RegimeReport r;
  r.threshold = threshold;
  r.scheme_a = {margin("theta_min/kappa", lo, kappa, threshold),
                margin("theta_min/(n_th*gamma_m)", lo, n_th * gamma_m, threshold),
                margin("theta_min/gamma_m", lo, gamma_m, threshold)};
  r.scheme_b = {margin("gamma_m/theta_max", gamma_m, hi, threshold),
                margin("theta_min/(sqrt(gamma_m*kappa)/2)", lo,
                       0.5 * std::sqrt(gamma_m * kappa), threshold)};
  auto all = [](const std::vector<Margin>& ms) {
    return std::all_of(ms.begin(), ms.end(), [](const Margin& m) { return m.pass; });
  };
  r.scheme_a_ok = all(r.scheme_a);
  r.scheme_b_ok = all(r.scheme_b);
  return r;
}

DeviceSummary summarize(const DeviceParams& p, double threshold) {
  p.validate();
  DeviceSummary s;
  for (int j = 1; j <= 2; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    s.g[k] = coupling_g(p, j, p.vx[k]);
    s.theta[k] = 0.5 * s.g[k];
  }
  s.gamma_m = p.omega_m / p.q_m;
  s.kappa = std::max(p.omega[0], p.omega[1]) / p.q_c;
  s.n_th = thermal_occupation(p.omega_m, p.temperature);
  const double big2 = s.theta[1] * s.theta[1] - s.theta[0] * s.theta[0];
  const double nan = std::numeric_limits<double>::quiet_NaN();
  s.engineered_rate = big2 > 0.0 ? 4.0 * big2 / s.gamma_m : nan;
  s.half_period = big2 > 0.0 ? std::numbers::pi / std::sqrt(big2) : nan;
  s.regime = regime_check(s.theta[0], s.theta[1], s.gamma_m, s.kappa, s.n_th,
                          threshold);
  return s;
}

}  // namespace cavem::device
