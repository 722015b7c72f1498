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
#include "oracles.hpp"

namespace cavem::fock {
namespace {

TEST(FockSpace, TotalDimensionIsProductOfDims) {
  EXPECT_EQ(make_space({2}, {"m"}).total_dim(), 2);
  EXPECT_EQ(make_space({3, 3, 3}, {"c1", "c2", "m"}).total_dim(), 27);
  EXPECT_EQ(make_space({10, 10, 8, 8}, {"c1", "c2", "m1", "m2"}).total_dim(),
            6400);
}

TEST(FockSpace, RejectsBadShapes) {
  EXPECT_THROW(make_space({}, {}), InvalidArgument);
  EXPECT_THROW(make_space({1}, {"a"}), InvalidArgument);
  EXPECT_THROW(make_space({3, 3}, {"a", "a"}), InvalidArgument);
  EXPECT_THROW(make_space({3, 3}, {"a"}), InvalidArgument);
}

TEST(FockSpace, LastModeVariesFastest) {
  const FockSpace s = make_space({2, 3}, {"x", "y"});
  EXPECT_EQ(s.stride(0), 3);
  EXPECT_EQ(s.stride(1), 1);
  // |1, 1> sits at 1*3 + 1
  EXPECT_EQ(s.occupation(4, 0), 1);
  EXPECT_EQ(s.occupation(4, 1), 1);
  EXPECT_EQ(s.occupation(5, 1), 2);
  EXPECT_THROW(s.mode_index("z"), InvalidArgument);
}

TEST(Operators, LadderMatchesKroneckerConstruction) {
  const std::vector<int> dims{3, 4, 2};
  const FockSpace s = make_space(dims, {"a", "b", "c"});
  const std::vector<std::string> labels{"a", "b", "c"};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto ref = testing::kron_lowering(dims, k);
    EXPECT_LT((annihilation(s, labels[k]).matrix() - ref).norm(), 1e-15);
    EXPECT_LT((creation(s, labels[k]).matrix() - ref.adjoint()).norm(), 1e-15);
    const auto n = number(s, labels[k]).matrix();
    EXPECT_LT((n - ref.adjoint() * ref).norm(), 1e-14);
  }
}

TEST(Operators, TruncatedCommutator) {
  const FockSpace s = make_space({4, 3}, {"a", "b"});
  for (const char* label : {"a", "b"}) {
    const std::size_t k = s.mode_index(label);
    const auto a = annihilation(s, label).matrix();
    const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (Eigen::Index i = 0; i < s.total_dim(); ++i) {
      const bool top = s.occupation(i, k) == s.dim(k) - 1;
      const double expected = top ? 1.0 - s.dim(k) : 1.0;
      EXPECT_NEAR(comm(i, i).real(), expected, 1e-14);
      for (Eigen::Index j = 0; j < s.total_dim(); ++j) {
        if (j != i) {
          EXPECT_EQ(comm(i, j), Complex{});
        }
      }
    }
  }
}

TEST(Operators, AlgebraAndHermiticity) {
  const FockSpace s = make_space({3, 3}, {"a", "b"});
  const Operator x = annihilation(s, "a") + creation(s, "a");
  EXPECT_TRUE(x.is_hermitian());
  EXPECT_FALSE(annihilation(s, "a").is_hermitian());
  const Operator y = Complex(0, 1) * (annihilation(s, "b") - creation(s, "b"));
  EXPECT_TRUE(y.is_hermitian());
  EXPECT_LT(((x * identity(s)).matrix() - x.matrix()).norm(), 1e-15);
  EXPECT_EQ(zero_operator(s).matrix().norm(), 0.0);
  const FockSpace other = make_space({3, 2}, {"a", "b"});
  EXPECT_THROW(x + identity(other), InvalidArgument);
}

TEST(States, VacuumAmplitudes) {
  const QuantumState v1 = vacuum(make_space({2}, {"m"}));
  ASSERT_TRUE(v1.is_pure());
  EXPECT_EQ(v1.amplitudes(), (CVector(2) << 1, 0).finished());
  const FockSpace s2 = make_space({2, 2}, {"a", "b"});
  const QuantumState v2 = vacuum(s2);
  EXPECT_EQ(v2.amplitudes(), (CVector(4) << 1, 0, 0, 0).finished());
  EXPECT_EQ(expectation(number(s2, "a"), v2), Complex{});
}

TEST(States, ConstructorChecks) {
  const FockSpace s = make_space({2}, {"m"});
  EXPECT_THROW(QuantumState::pure(s, (CVector(2) << 1, 1).finished()),
               InvalidArgument);
  CMatrix bad(2, 2);
  bad << 0.5, 0.2, 0.0, 0.5;
  EXPECT_THROW(QuantumState::mixed(s, bad), InvalidArgument);
  CMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(QuantumState::mixed(s, neg), InvalidArgument);
  EXPECT_NO_THROW(QuantumState::mixed(s, neg, QuantumState::Check::kCheap));
  EXPECT_THROW(vacuum(s).density(), InvalidArgument);
}

TEST(Thermal, ZeroOccupationIsVacuumProjector) {
  const FockSpace s = make_space({4, 3}, {"a", "b"});
  const std::vector<double> n{0.0, 0.0};
  const CMatrix rho = thermal_state(s, n).density_matrix();
  CMatrix expected = CMatrix::Zero(12, 12);
  expected(0, 0) = 1.0;
  EXPECT_LT((rho - expected).norm(), 1e-15);
}

TEST(Thermal, MeanOccupationAndPositivity) {
  const FockSpace s = make_space({30}, {"m"});
  const std::vector<double> n{1.0};
  const QuantumState th = thermal_state(s, n);
  const CMatrix rho = th.density_matrix();
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
  EXPECT_NEAR(expectation(number(s, "m"), th).real(), 1.0, 1e-6);
  const auto p = testing::geometric(1.0, 30);
  for (int k = 0; k < 30; ++k) EXPECT_NEAR(rho(k, k).real(), p[k], 1e-15);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
  EXPECT_GE(es.eigenvalues().minCoeff(), 0.0);
}

TEST(Thermal, TailTooHeavyNamesTheMode) {
  const FockSpace s = make_space({3, 8}, {"c1", "mech"});
  const std::vector<double> n{0.0, 10.0};
  try {
    thermal_state(s, n);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_NE(std::string(e.what()).find("mech"), std::string::npos);
  }
  // (10/11)^8 is about 0.47; a loose enough tolerance accepts it.
  EXPECT_NO_THROW(thermal_state(s, n, 0.5));
}

TEST(Tmsv, ZeroSqueezingIsVacuum) {
  const FockSpace s = make_space({5, 5}, {"c1", "c2"});
  const QuantumState t = tmsv_state(s, 0.0, 1);
  EXPECT_LT((t.density_matrix() - vacuum(s).density_matrix()).norm(), 1e-15);
}

TEST(Tmsv, NegativeSignIsParityRotationOfSecondMode) {
  const FockSpace s = make_space({12, 12}, {"c1", "c2"});
  const double zeta = 0.4;
  const CVector plus = tmsv_state(s, zeta, 1).amplitudes();
  const CVector minus = tmsv_state(s, zeta, -1).amplitudes();
  for (Eigen::Index i = 0; i < s.total_dim(); ++i) {
    const double parity = s.occupation(i, 1) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(std::abs(minus(i) - parity * plus(i)), 0.0, 1e-15);
  }
}

TEST(Tmsv, PairCorrelationMatchesFockSum) {
  const double zeta = std::atanh(0.5);
  const FockSpace s = make_space({30, 30}, {"c1", "c2"});
  const QuantumState t = tmsv_state(s, zeta, 1);
  // sum_n c_n c_{n+1} (n+1) with c_n = lambda^n / norm, truncated at 30
  double num = 0.0, norm = 0.0;
  for (int n = 0; n < 30; ++n) {
    norm += std::pow(0.25, n);
    if (n + 1 < 30) num += std::pow(0.5, 2 * n + 1) * (n + 1);
  }
  const double oracle = num / norm;
  const Complex v =
      expectation(annihilation(s, "c1") * annihilation(s, "c2"), t);
  EXPECT_NEAR(v.real(), oracle, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-14);
  EXPECT_NEAR(oracle, std::cosh(zeta) * std::sinh(zeta), 1e-12);
  EXPECT_NEAR(oracle, 2.0 / 3.0, 1e-12);
}

TEST(Tmsv, RequiresTwoModesAndEnoughLevels) {
  EXPECT_THROW(tmsv_state(make_space({4}, {"a"}), 0.1, 1), InvalidArgument);
  EXPECT_THROW(tmsv_state(make_space({3, 3}, {"a", "b"}), 1.5, 1),
               TruncationError);
}

TEST(Expectation, HermitianObservablesAreReal) {
  const FockSpace s = make_space({6, 6}, {"a", "b"});
  const QuantumState t = tmsv_state(s, 0.3, -1, 1e-3);
  const Operator a = annihilation(s, "a");
  const Operator b = annihilation(s, "b");
  const Operator obs = a * b + (a * b).adjoint() + number(s, "a");
  EXPECT_LT(std::abs(expectation(obs, t).imag()), 1e-10);
  const QuantumState mixed =
      QuantumState::mixed(s, t.density_matrix(), QuantumState::Check::kCheap);
  EXPECT_NEAR(expectation(obs, mixed).real(), expectation(obs, t).real(),
              1e-12);
}

TEST(PartialTrace, ProductStateFactors) {
  const FockSpace s = make_space({3, 4}, {"a", "b"});
  const std::vector<double> n{0.3, 0.6};
  const QuantumState th = thermal_state(s, n, 0.1);
  const std::vector<std::string> keep{"b"};
  const QuantumState rb = partial_trace(th, keep);
  EXPECT_EQ(rb.space().labels(), keep);
  const auto p = testing::geometric(0.6, 4);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(rb.density()(k, k).real(), p[k], 1e-14);
  }
}

TEST(PartialTrace, TmsvMarginalIsThermal) {
  const FockSpace s = make_space({25, 25}, {"c1", "c2"});
  const double zeta = 0.5;
  const QuantumState t = tmsv_state(s, zeta, 1);
  const std::vector<std::string> keep{"c1"};
  const QuantumState r = partial_trace(t, keep);
  const double nbar = std::sinh(zeta) * std::sinh(zeta);
  const auto p = testing::geometric(nbar, 25);
  for (int k = 0; k < 25; ++k) {
    EXPECT_NEAR(r.density()(k, k).real(), p[k], 1e-12);
  }
}

TEST(TraceDistance, OrthogonalAndIdentical) {
  const FockSpace s = make_space({3}, {"a"});
  CVector one = CVector::Zero(3);
  one(1) = 1.0;
  const QuantumState v = vacuum(s);
  const QuantumState e = QuantumState::pure(s, one);
  EXPECT_NEAR(trace_distance(v, e), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(v, v), 0.0, 1e-12);
  CMatrix mix = CMatrix::Zero(3, 3);
  mix(0, 0) = 0.5;
  mix(1, 1) = 0.5;
  EXPECT_NEAR(trace_distance(v, QuantumState::mixed(s, mix)), 0.5, 1e-12);
}

TEST(Ladder, ActionsMatchOperators) {
  const FockSpace s = make_space({3, 4}, {"a", "b"});
  CMatrix m = CMatrix::Random(12, 5);
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string label = s.labels()[k];
    EXPECT_LT((apply_lowering(s, k, m) - annihilation(s, label).matrix() * m)
                  .norm(),
              1e-13);
    EXPECT_LT((apply_raising(s, k, m) - creation(s, label).matrix() * m).norm(),
              1e-13);
  }
}

TEST(Ladder, MomentsMatchExpectations) {
  const FockSpace s = make_space({5, 5}, {"a", "b"});
  CVector psi = CVector::Random(25);
  psi.normalize();
  const QuantumState st = QuantumState::pure(s, psi);
  const std::vector<std::size_t> modes{0, 1};
  const LadderMoments lm = ladder_moments(st, modes);
  const Operator a = annihilation(s, "a");
  const Operator b = annihilation(s, "b");
  EXPECT_LT(std::abs(lm.mean[0] - expectation(a, st)), 1e-13);
  EXPECT_LT(std::abs(lm.mean[1] - expectation(b, st)), 1e-13);
  EXPECT_LT(std::abs(lm.aa[0][1] - expectation(a * b, st)), 1e-13);
  EXPECT_LT(std::abs(lm.aa[1][1] - expectation(b * b, st)), 1e-13);
  EXPECT_LT(std::abs(lm.ad[0][1] - expectation(a.adjoint() * b, st)), 1e-13);
  EXPECT_LT(std::abs(lm.ad[1][1] - expectation(number(s, "b"), st)), 1e-13);
}

}  // namespace
}  // namespace cavem::fock
