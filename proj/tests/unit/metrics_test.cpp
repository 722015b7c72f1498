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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cavem/error.hpp"
#include "cavem/fock.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/metrics.hpp"
#include "oracles.hpp"

namespace cavem::metrics {
namespace {

using gaussian::GaussianState;

const std::vector<std::string> kPair{"c1", "c2"};

TEST(Duan, VacuumIsTheBoundary) {
  const DuanResult d = duan_variance(GaussianState::vacuum(2), 0, 1);
  EXPECT_NEAR(d.v_minus, 2.0, 1e-15);
  EXPECT_NEAR(d.v_plus, 2.0, 1e-15);
  EXPECT_FALSE(d.entangled);
  const auto s = fock::make_space({3, 3}, kPair);
  EXPECT_NEAR(duan_variance(fock::vacuum(s), "c1", "c2").v_min, 2.0, 1e-15);
}

TEST(Duan, SqueezedVacuumLaw) {
  for (double zeta : {0.1, 0.5, 1.0}) {
    const DuanResult d = duan_variance(tmsv_gaussian(zeta, 1), 0, 1);
    EXPECT_NEAR(d.v_minus, 2.0 * std::exp(-2.0 * zeta), 1e-14);
    EXPECT_NEAR(d.v_plus, 2.0 * std::exp(2.0 * zeta), 1e-12);
    EXPECT_TRUE(d.entangled);
  }
}

TEST(Duan, SignFlipSwapsConventions) {
  for (double zeta : {0.2, 0.8}) {
    const DuanResult p = duan_variance(tmsv_gaussian(zeta, 1), 0, 1);
    const DuanResult m = duan_variance(tmsv_gaussian(zeta, -1), 0, 1);
    EXPECT_DOUBLE_EQ(p.v_minus, m.v_plus);
    EXPECT_DOUBLE_EQ(p.v_plus, m.v_minus);
    EXPECT_DOUBLE_EQ(p.v_min, m.v_min);
  }
}

TEST(Duan, ThermalProductFromFockOracle) {
  const std::vector<int> dims{20, 20};
  const auto s = fock::make_space(dims, kPair);
  for (double n : {0.0, 0.2, 0.5}) {
    const std::vector<double> occ{n, n};
    const auto th = fock::thermal_state(s, occ);
    const auto mom = testing::quadrature_moments(th.density_matrix(), dims);
    // Var(X1 - X2) + Var(P1 + P2) directly from the covariance entries
    const double oracle = mom.cov(0, 0) + mom.cov(2, 2) - 2 * mom.cov(0, 2) +
                          mom.cov(1, 1) + mom.cov(3, 3) + 2 * mom.cov(1, 3);
    const DuanResult d = duan_variance(th, "c1", "c2");
    EXPECT_NEAR(d.v_minus, oracle, 1e-10);
    EXPECT_NEAR(d.v_min, 2.0 * (2.0 * n + 1.0), 1e-5);
    EXPECT_FALSE(d.entangled);
    const DuanResult g = duan_variance(GaussianState::thermal(occ), 0, 1);
    EXPECT_NEAR(g.v_min, 2.0 * (2.0 * n + 1.0), 1e-14);
  }
}

TEST(Duan, FockAndGaussianPathsAgree) {
  const auto s = fock::make_space({30, 30}, kPair);
  for (double zeta : {0.1, 0.5}) {
    for (int sign : {1, -1}) {
      const DuanResult f = duan_variance(fock::tmsv_state(s, zeta, sign), "c1", "c2");
      const DuanResult g = duan_variance(tmsv_gaussian(zeta, sign), 0, 1);
      EXPECT_NEAR(f.v_minus, g.v_minus, 1e-6);
      EXPECT_NEAR(f.v_plus, g.v_plus, 1e-6);
    }
  }
  const std::vector<double> occ{0.5, 0.5};
  EXPECT_NEAR(duan_variance(fock::thermal_state(s, occ), "c1", "c2").v_min,
              duan_variance(GaussianState::thermal(occ), 0, 1).v_min, 1e-8);
}

TEST(Duan, ProductStatesAreNeverEntangled) {
  for (double a : {0.0, 0.01, 0.3, 2.0}) {
    for (double b : {0.0, 0.7}) {
      const std::vector<double> occ{a, b};
      EXPECT_FALSE(duan_variance(GaussianState::thermal(occ), 0, 1).entangled);
    }
  }
}

TEST(Duan, BadIndices) {
  EXPECT_THROW(duan_variance(GaussianState::vacuum(2), 0, 2), InvalidArgument);
  EXPECT_THROW(duan_variance(GaussianState::vacuum(2), 1, 1), InvalidArgument);
}

TEST(Fidelity, TargetWithItself) {
  const double zeta = 0.6;
  EXPECT_NEAR(fidelity_with_tmsv(tmsv_gaussian(zeta, -1), zeta, -1), 1.0, 1e-12);
  const auto s = fock::make_space({30, 30}, kPair);
  EXPECT_NEAR(fidelity_with_tmsv(fock::tmsv_state(s, zeta, -1), zeta, -1), 1.0,
              1e-12);
}

TEST(Fidelity, VacuumOverlap) {
  // |<00|tmsv>|^2 = 1 / cosh^2 zeta
  const double zeta = 0.5;
  const double expected = 1.0 / std::pow(std::cosh(zeta), 2);
  EXPECT_NEAR(fidelity_with_tmsv(GaussianState::vacuum(2), zeta, 1), expected,
              1e-12);
  const auto s = fock::make_space({30, 30}, kPair);
  EXPECT_NEAR(fidelity_with_tmsv(fock::vacuum(s), zeta, 1), expected, 1e-10);
}

TEST(Fidelity, FockAndGaussianAgreeOnMixedState) {
  const std::vector<double> occ{0.2, 0.2};
  const auto s = fock::make_space({25, 25}, kPair);
  const double f = fidelity_with_tmsv(fock::thermal_state(s, occ), 0.4, 1);
  const double g = fidelity_with_tmsv(GaussianState::thermal(occ), 0.4, 1);
  EXPECT_NEAR(f, g, 1e-8);
}

TEST(Fidelity, SymmetricInArguments) {
  const auto a = tmsv_gaussian(0.3, 1);
  const auto b = tmsv_gaussian(0.7, -1);
  EXPECT_NEAR(fidelity_with_pure(a, b), fidelity_with_pure(b, a), 1e-14);
}

TEST(Fidelity, NonzeroMeanRejected) {
  GaussianState g = GaussianState::vacuum(2);
  g.mean(0) = 0.1;
  EXPECT_THROW(fidelity_with_tmsv(g, 0.3, 1), InvalidArgument);
}

TEST(Occupations, Values) {
  for (double n : occupations(GaussianState::vacuum(3))) EXPECT_EQ(n, 0.0);
  const double zeta = 0.7;
  for (double n : occupations(tmsv_gaussian(zeta, -1))) {
    EXPECT_NEAR(n, std::pow(std::sinh(zeta), 2), 1e-14);
  }
  const auto s = fock::make_space({40, 40}, kPair);
  for (double n : occupations(fock::tmsv_state(s, zeta, 1))) {
    EXPECT_NEAR(n, std::pow(std::sinh(zeta), 2), 1e-8);
  }
  const std::vector<double> occ{0.25, 1.5};
  const auto th = occupations(GaussianState::thermal(occ));
  EXPECT_NEAR(th[0], 0.25, 1e-15);
  EXPECT_NEAR(th[1], 1.5, 1e-15);
}

TEST(Purity, PureAndThermal) {
  EXPECT_NEAR(purity(tmsv_gaussian(0.9, 1)), 1.0, 1e-12);
  const auto s = fock::make_space({20, 20}, kPair);
  EXPECT_NEAR(purity(fock::tmsv_state(s, 0.5, -1)), 1.0, 1e-12);
  const std::vector<double> one{1.0};
  EXPECT_NEAR(purity(GaussianState::thermal(one)), 1.0 / 3.0, 1e-14);
  const auto s1 = fock::make_space({60}, {"m"});
  EXPECT_NEAR(purity(fock::thermal_state(s1, one)), 1.0 / 3.0, 1e-9);
}

TEST(Purity, ThermalHalfAgreesAcrossRepresentations) {
  const std::vector<double> occ{0.5, 0.5};
  const auto s = fock::make_space({30, 30}, kPair);
  const auto f = fock::thermal_state(s, occ);
  EXPECT_NEAR(purity(f), purity(GaussianState::thermal(occ)), 1e-8);
  EXPECT_NEAR(duan_variance(f, "c1", "c2").v_min,
              duan_variance(GaussianState::thermal(occ), 0, 1).v_min, 1e-8);
}

}  // namespace
}  // namespace cavem::metrics
