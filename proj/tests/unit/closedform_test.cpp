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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "cavem/closedform.hpp"
#include "cavem/error.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/metrics.hpp"
#include "cavem/model.hpp"

namespace cavem::closedform {
namespace {

constexpr double kPi = std::numbers::pi;

// d xi/dt = G xi from i[H, .] with
// H = -t1 (a1^dag b^dag + h.c.) - t2 (a2^dag b + h.c.).
Matrix6c heisenberg_generator(double t1, double t2) {
  const Complex i(0, 1);
  Matrix6c g = Matrix6c::Zero();
  g(0, 5) = i * t1;       // a1' = i t1 b^dag
  g(1, 2) = i * t2;       // a2' = i t2 b
  g(2, 3) = i * t1;       // b'  = i t1 a1^dag + i t2 a2
  g(2, 1) = i * t2;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      g(3 + r, 3 + c) = std::conj(g(r, c));
      g(3 + r, c) = std::conj(g(r, 3 + c));
    }
  }
  return g;
}

TEST(Propagator, IdentityAtZero) {
  const BogoliubovMap m = propagator(1, 2, 0.0);
  EXPECT_LT((m.coefficients - Matrix6c::Identity()).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(Propagator, MatchesExponentialOfHeisenbergGenerator) {
  for (double t : {0.1, 0.7, 1.3, 2.9, 11.0}) {
    for (auto [t1, t2] : {std::pair{1.0, 2.0}, {0.3, 0.5}, {-0.4, 1.1}}) {
      const Matrix6c ref = (heisenberg_generator(t1, t2) * t).exp();
      EXPECT_LT((propagator(t1, t2, t).coefficients - ref).cwiseAbs().maxCoeff(),
                1e-12)
          << "t=" << t << " theta=(" << t1 << "," << t2 << ")";
    }
  }
}

TEST(Propagator, HalfPeriodDecouplesMechanics) {
  const BogoliubovMap m = propagator(1, 2, kPi / std::sqrt(3.0));
  const auto& c = m.coefficients;
  EXPECT_NEAR(c(0, 0).real(), 5.0 / 3.0, 1e-14);
  EXPECT_NEAR(c(0, 4).real(), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(c(2, 2).real(), -1.0, 1e-14);
  for (int col = 0; col < 6; ++col) {
    if (col != 0 && col != 4) {
      EXPECT_NEAR(std::abs(c(0, col)), 0.0, 1e-14);
    }
    if (col != 2) {
      EXPECT_NEAR(std::abs(c(2, col)), 0.0, 1e-14);
    }
  }
}

TEST(Propagator, WeakSqueezingLimitIsBeamSplitter) {
  const double t2 = 1.7;
  for (double t : {0.2, 1.0, 2.5}) {
    const auto& c = propagator(1e-9, t2, t).coefficients;
    EXPECT_NEAR(std::abs(c(0, 0) - 1.0), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(c(1, 1) - std::cos(t2 * t)), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(c(1, 2) - Complex(0, std::sin(t2 * t))), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(c(2, 2) - std::cos(t2 * t)), 0.0, 1e-8);
  }
}

TEST(Propagator, RejectsHyperbolicRegime) {
  EXPECT_THROW(propagator(2, 1, 0.1), InvalidArgument);
  EXPECT_THROW(propagator(1, 1, 0.1), InvalidArgument);
  EXPECT_THROW(propagator(1, -1, 0.1), InvalidArgument);
}

TEST(PropagatorProperty, SymplecticAtRandomTimes) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> t_dist(0.0, 50.0);
  std::uniform_real_distribution<double> th(0.05, 3.0);
  for (int k = 0; k < 100; ++k) {
    double t1 = th(rng), t2 = th(rng);
    if (t2 < t1) std::swap(t1, t2);
    if (t2 - t1 < 1e-3) t2 += 0.1;
    const auto m = propagator(t1, t2, t_dist(rng));
    // near-degenerate couplings give entries of order 30, so scale by them
    const double scale = std::max(1.0, m.coefficients.cwiseAbs().maxCoeff());
    EXPECT_LE(m.symplectic_defect(), 1e-13 * scale * scale);
  }
}

TEST(PropagatorProperty, SymplecticForUnitRatioTwo) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> t_dist(0.0, 100.0);
  for (int k = 0; k < 100; ++k) {
    EXPECT_LE(propagator(1.0, 2.0, t_dist(rng)).symplectic_defect(), 1e-12);
  }
}

TEST(PropagatorProperty, PeriodicInTwoHalfPeriods) {
  const double tp = half_period(0.8, 1.9);
  const auto& c = propagator(0.8, 1.9, 2.0 * tp).coefficients;
  // a2 and b return to themselves up to sign; a1 is the squeezed cavity
  EXPECT_NEAR(std::abs(c(2, 2) - 1.0), 0.0, 1e-12);
}

TEST(HalfPeriod, Values) {
  EXPECT_NEAR(half_period(0, 1), kPi, 1e-15);
  EXPECT_NEAR(half_period(1, 2), kPi / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(half_period(1, 2), 1.8137993642342178, 1e-14);
  const double r = 1.0 + std::pow(2.5, -5.0);
  EXPECT_NEAR(half_period(1, r), kPi / std::sqrt(r * r - 1.0), 1e-9);
  EXPECT_THROW(half_period(1, 1), InvalidArgument);
}

TEST(SqueezeParameter, SchemeB) {
  const double z = squeeze_parameter(1, 2, Scheme::kB);
  EXPECT_NEAR(std::tanh(z), 0.5, 1e-15);
  EXPECT_NEAR(2.0 * std::exp(-2.0 * z), 2.0 / 3.0, 1e-14);
  EXPECT_THROW(squeeze_parameter(2, 1, Scheme::kB), InvalidArgument);
}

TEST(SqueezeParameter, SchemeA) {
  const double z = squeeze_parameter(1, 2, Scheme::kA);
  EXPECT_NEAR(std::tanh(z), 0.8, 1e-15);
  EXPECT_NEAR(2.0 * std::exp(-2.0 * z), 2.0 / 9.0, 1e-14);
  EXPECT_LT(squeeze_parameter(1, 1e6, Scheme::kA), 1e-5);
  EXPECT_EQ(squeeze_parameter(0, 1, Scheme::kA), 0.0);
  EXPECT_THROW(squeeze_parameter(1, 1, Scheme::kA), InvalidArgument);
}

TEST(ApplyToGaussian, IdentityLeavesStateAlone) {
  const std::vector<double> n{0.2, 0.0, 3.0};
  const auto g = gaussian::GaussianState::thermal(n);
  const auto out = apply_to_gaussian(propagator(1, 2, 0.0), g);
  EXPECT_LT((out.cov - g.cov).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(apply_to_gaussian(propagator(1, 2, 0.0),
                                 gaussian::GaussianState::vacuum(2)),
               InvalidArgument);
}

TEST(ApplyToGaussian, HalfPeriodGivesSqueezedVacuumForAnyMechanicalState) {
  const double tp = half_period(1, 2);
  const double zeta = squeeze_parameter(1, 2, Scheme::kA);
  const auto target = metrics::tmsv_gaussian(zeta, -1);
  const std::vector<std::size_t> cav{0, 1};
  for (double n_th : {0.0, 10.0, 100.0}) {
    const std::vector<double> n{0.0, 0.0, n_th};
    const auto out = apply_to_gaussian(propagator(1, 2, tp),
                                       gaussian::GaussianState::thermal(n));
    const auto red = out.reduced(cav);
    EXPECT_LT((red.cov - target.cov).cwiseAbs().maxCoeff(), 1e-11) << n_th;
  }
}

TEST(QuadratureMatrix, MatchesGaussianDriftExponential) {
  const auto dd = gaussian::drift_diffusion(model::scheme_a(1, 2));
  for (double t : {0.3, half_period(1, 2)}) {
    const Eigen::MatrixXd ref = (dd.drift * t).exp();
    EXPECT_LT((propagator(1, 2, t).quadrature_matrix() - ref).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

}  // namespace
}  // namespace cavem::closedform
