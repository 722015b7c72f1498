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

#include <Eigen/Dense>

#include "cavem/fock.hpp"
#include "cavem/gaussian.hpp"

namespace cavem::closedform {

/// Operator ordering of rows and columns: (a1, a2, b, a1^dag, a2^dag, b^dag).
using Matrix6c = Eigen::Matrix<Complex, 6, 6>;

/// Heisenberg propagator of scheme A: xi(t) = coefficients * xi(0).
struct BogoliubovMap {
  Matrix6c coefficients = Matrix6c::Identity();
  double time = 0.0;

  /// max |M K M^T - K| with K the commutator metric [[0, I], [-I, 0]].
  double symplectic_defect() const;

  /// Real 6x6 map acting on (X1, P1, X2, P2, Xm, Pm).
  Eigen::Matrix<double, 6, 6> quadrature_matrix() const;
};

enum class Scheme { kA, kB };

/// Closed-form propagator for H = -theta1 (a1^dag b^dag + h.c.)
/// - theta2 (a2^dag b + h.c.). Requires |theta2| > |theta1|.
BogoliubovMap propagator(double theta1, double theta2, double t);

/// pi / sqrt(theta2^2 - theta1^2).
double half_period(double theta1, double theta2);

/// Scheme A: atanh(2r / (1 + r^2)) with r = |theta2 / theta1|.
/// Scheme B: atanh(theta1 / theta2).
double squeeze_parameter(double theta1, double theta2, Scheme scheme);

/// Pushes a 3-mode Gaussian state (c1, c2, m) through the map.
gaussian::GaussianState apply_to_gaussian(const BogoliubovMap& map,
                                          const gaussian::GaussianState& g);

}  // namespace cavem::closedform
