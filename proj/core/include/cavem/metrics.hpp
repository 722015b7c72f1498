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

#include <cstddef>
#include <string>
#include <vector>

#include "cavem/fock.hpp"
#include "cavem/gaussian.hpp"

namespace cavem::metrics {

/// Duan total variance for both EPR sign conventions.
///   v_minus: u = X1 - X2, v = P1 + P2
///   v_plus:  u = X1 + X2, v = P1 - P2
struct DuanResult {
  double v_minus = 0.0;
  double v_plus = 0.0;
  double v_min = 0.0;
  bool entangled = false;  // v_min < 2
};

DuanResult duan_variance(const gaussian::GaussianState& g, std::size_t mode1,
                         std::size_t mode2);
DuanResult duan_variance(const fock::QuantumState& state,
                         const std::string& label1, const std::string& label2);

/// Covariance of the two-mode squeezed vacuum sum_n (sign tanh zeta)^n |n,n>.
gaussian::GaussianState tmsv_gaussian(double zeta, int sign);

/// <psi_tmsv| rho |psi_tmsv> on a two-mode Fock state.
double fidelity_with_tmsv(const fock::QuantumState& state, double zeta,
                          int sign,
                          double tail_tolerance = fock::kDefaultTailTolerance);
/// 1 / sqrt(det(sigma + sigma_tmsv)); the state must have zero mean.
double fidelity_with_tmsv(const gaussian::GaussianState& g, double zeta,
                          int sign);
/// Fidelity between a zero-mean Gaussian state and a zero-mean pure one.
double fidelity_with_pure(const gaussian::GaussianState& g,
                          const gaussian::GaussianState& pure_target);

std::vector<double> occupations(const gaussian::GaussianState& g);
std::vector<double> occupations(const fock::QuantumState& state);

double purity(const gaussian::GaussianState& g);
double purity(const fock::QuantumState& state);

}  // namespace cavem::metrics
