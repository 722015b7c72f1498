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
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cavem/error.hpp"
#include "cavem/fock.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/lindblad.hpp"
#include "cavem/metrics.hpp"
#include "cavem/serialize.hpp"
#include "json.hpp"

namespace cavem::serialize {
namespace {

TEST(StateJson, PureRoundTrip) {
  const auto s = fock::make_space({4, 3}, {"c1", "m"});
  CVector psi = CVector::Random(12);
  psi.normalize();
  const auto st = fock::QuantumState::pure(s, psi);
  const auto back = state_from_json(to_json(st));
  ASSERT_TRUE(back.is_pure());
  EXPECT_EQ(back.space(), s);
  EXPECT_EQ((back.amplitudes() - psi).norm(), 0.0);
}

TEST(StateJson, MixedRoundTripKeepsRowMajorLayout) {
  const auto s = fock::make_space({2, 2}, {"a", "b"});
  const std::vector<double> occ{0.3, 0.1};
  const auto th = fock::thermal_state(s, occ, 0.5);
  const std::string text = to_json(th);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("kind"), "mixed");
  EXPECT_EQ(j.at("data").size(), 16u);
  EXPECT_DOUBLE_EQ(j.at("data")[5][0].get<double>(), th.density()(1, 1).real());
  const auto back = state_from_json(text);
  EXPECT_EQ((back.density() - th.density()).norm(), 0.0);
}

TEST(StateJson, RejectsMalformed) {
  EXPECT_THROW(state_from_json("{"), InvalidArgument);
  EXPECT_THROW(state_from_json(R"({"dims":[2],"labels":["a"],"kind":"pure","data":[[1,0]]})"),
               InvalidArgument);
  EXPECT_THROW(state_from_json(R"({"dims":[2],"labels":["a"],"kind":"odd","data":[[1,0],[0,0]]})"),
               InvalidArgument);
}

TEST(OperatorJson, RoundTrip) {
  const auto s = fock::make_space({3, 2}, {"a", "b"});
  const auto op = fock::annihilation(s, "a") * Complex(0.5, -2.0);
  const auto back = operator_from_json(to_json(op));
  EXPECT_EQ((back.matrix() - op.matrix()).norm(), 0.0);
}

TEST(GaussianJson, RoundTrip) {
  auto g = metrics::tmsv_gaussian(0.3, -1);
  g.mean(1) = 0.25;
  const auto back = gaussian_from_json(to_json(g));
  EXPECT_EQ((back.cov - g.cov).norm(), 0.0);
  EXPECT_EQ((back.mean - g.mean).norm(), 0.0);
}

TEST(CovarianceCsv, Shape) {
  const std::string csv = covariance_csv(gaussian::GaussianState::vacuum(2));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "0.5,0,0,0");
}

TEST(EvolutionJson, StatesOnlyOnRequest) {
  const auto s = fock::make_space({2}, {"a"});
  lindblad::EvolutionResult r;
  r.times = {0.0, 1.0};
  r.states = {fock::vacuum(s), fock::vacuum(s)};
  r.diagnostics.resize(2);
  r.diagnostics[1].min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  r.warnings = {"w"};
  const auto plain = nlohmann::json::parse(to_json(r));
  EXPECT_FALSE(plain.contains("states"));
  EXPECT_EQ(plain.at("times").size(), 2u);
  const auto full = nlohmann::json::parse(to_json(r, true));
  EXPECT_EQ(full.at("states").size(), 2u);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

}  // namespace
}  // namespace cavem::serialize
