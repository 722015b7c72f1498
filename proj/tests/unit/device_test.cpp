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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cavem/device.hpp"
#include "cavem/error.hpp"

namespace cavem::device {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DeviceParams membrane() {
  DeviceParams p;
  p.c0 = 40e-15;
  p.d = 50e-9;
  p.mass = 48e-15;
  p.omega_m = kTwoPi * 10.69e6;
  p.omega = {kTwoPi * 10e9, kTwoPi * 10e9};
  p.cap = {0.4e-12, 0.4e-12};
  p.vx = {10.0, 10.0};
  p.q_m = 356333;
  p.q_c = 1e6;
  p.temperature = 0.025;
  return p;
}

TEST(Coupling, HandEvaluatedValue) {
  // (C0/d) sqrt(omega1 / (2 m omega_m C1)) V evaluated by hand in SI
  EXPECT_NEAR(coupling_g(membrane(), 1, 10.0) / 1.2486350514609e9, 1.0, 1e-10);
  EXPECT_NEAR(effective_theta(membrane(), 1) / 6.243175257305e8, 1.0, 1e-10);
}

TEST(Coupling, Homogeneity) {
  const DeviceParams p = membrane();
  const double g = coupling_g(p, 1, 3.0);
  EXPECT_NEAR(coupling_g(p, 1, 6.0), 2.0 * g, 1e-6);
  for (double scale : {0.5, 2.0, 7.0}) {
    DeviceParams q = p;
    q.d *= scale;
    EXPECT_NEAR(coupling_g(q, 1, 3.0) * scale / g, 1.0, 1e-14);
    q = p;
    q.vx[1] *= scale;
    EXPECT_NEAR(effective_theta(q, 2) / (scale * effective_theta(p, 2)), 1.0,
                1e-14);
  }
}

TEST(Coupling, ThetaIsHalfOfG) {
  const DeviceParams p = membrane();
  EXPECT_DOUBLE_EQ(effective_theta(p, 2), 0.5 * coupling_g(p, 2, p.vx[1]));
}

TEST(Coupling, DriveRatio) {
  DeviceParams p = membrane();
  p.vx[1] = 1.01 * p.vx[0];
  EXPECT_NEAR(effective_theta(p, 2) / effective_theta(p, 1), 1.01, 1e-14);
}

TEST(Coupling, Validation) {
  DeviceParams p = membrane();
  p.mass = 0;
  EXPECT_THROW(coupling_g(p, 1, 1.0), InvalidArgument);
  EXPECT_THROW(coupling_g(membrane(), 3, 1.0), InvalidArgument);
  EXPECT_THROW(coupling_g(membrane(), 1, -1.0), InvalidArgument);
  p = membrane();
  p.temperature = -1;
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(ThermalOccupation, Values) {
  EXPECT_EQ(thermal_occupation(1e9, 0.0), 0.0);
  const double w = kTwoPi * 6e9;
  const double n = thermal_occupation(w, 0.025);
  EXPECT_LT(n, 0.07);
  EXPECT_NEAR(n / 9.94765790023e-6, 1.0, 1e-9);
  const double t = kHbar * w / (kBoltzmann * std::log(2.0));
  EXPECT_NEAR(thermal_occupation(w, t), 1.0, 1e-12);
}

TEST(ThermalOccupation, Monotone) {
  double prev = 0.0;
  for (double t : {0.01, 0.02, 0.05, 0.1, 1.0}) {
    const double n = thermal_occupation(kTwoPi * 1e9, t);
    EXPECT_GT(n, prev);
    prev = n;
  }
  prev = INFINITY;
  for (double f : {1e6, 1e8, 1e9, 1e10}) {
    const double n = thermal_occupation(kTwoPi * f, 0.05);
    EXPECT_LT(n, prev);
    prev = n;
  }
}

TEST(Regime, SchemeB) {
  const double theta = 1.0;
  EXPECT_TRUE(regime_check(theta, theta, 100 * theta, 0.0, 0.0).scheme_b_ok);
  EXPECT_FALSE(regime_check(theta, theta, theta, 0.0, 0.0).scheme_b_ok);
  const RegimeReport r = regime_check(1.0, 2.0, 100.0, 0.0, 0.0);
  ASSERT_EQ(r.scheme_b.size(), 2u);
  EXPECT_NEAR(r.scheme_b[0].ratio, 50.0, 1e-12);
  EXPECT_TRUE(std::isinf(r.scheme_b[1].ratio));
  EXPECT_FALSE(r.scheme_a_ok);
}

TEST(Regime, SchemeA) {
  const RegimeReport r = regime_check(10.0, 20.0, 0.1, 0.01, 2.0);
  EXPECT_TRUE(r.scheme_a_ok);
  EXPECT_NEAR(r.scheme_a[1].ratio, 50.0, 1e-12);
  EXPECT_FALSE(regime_check(10.0, 20.0, 0.1, 0.01, 20.0).scheme_a_ok);
}

TEST(Regime, GammaMonotone) {
  bool passed = false;
  for (double g = 1.0; g < 1e4; g *= 1.5) {
    const bool now = regime_check(1.0, 2.0, g, 0.0, 0.0).scheme_b[0].pass;
    EXPECT_FALSE(passed && !now);
    passed = passed || now;
  }
  EXPECT_TRUE(passed);
}

TEST(Summary, MembraneDevice) {
  DeviceParams p = membrane();
  p.vx[1] = 10.1;
  const DeviceSummary s = summarize(p);
  EXPECT_NEAR(s.gamma_m, p.omega_m / p.q_m, 1e-9);
  EXPECT_NEAR(s.kappa, p.omega[0] / p.q_c, 1e-9);
  EXPECT_GT(s.engineered_rate, 0.0);
  EXPECT_NEAR(s.theta[1] / s.theta[0], 1.01, 1e-14);
  p.vx[1] = 9.0;
  EXPECT_TRUE(std::isnan(summarize(p).half_period));
}

}  // namespace
}  // namespace cavem::device
