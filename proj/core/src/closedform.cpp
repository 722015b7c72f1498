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

#include "cavem/closedform.hpp"

#include <cmath>
#include <numbers>

#include "cavem/error.hpp"

namespace cavem::closedform {

namespace {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_elliptic(double theta1, double theta2, const char* where) {
  if (!std::isfinite(theta1) || !std::isfinite(theta2) ||
      !(std::abs(theta2) > std::abs(theta1))) {
    throw InvalidArgument(std::string(where) +
                          ": requires |theta2| > |theta1| (periodic regime)");
  }
}

Matrix6c metric() {
  Matrix6c k = Matrix6c::Zero();
  k.block<3, 3>(0, 3).setIdentity();
  k.block<3, 3>(3, 0) = -Eigen::Matrix3cd::Identity();
  return k;
}

// R = T xi, rows (X1, P1, X2, P2, Xm, Pm).
Matrix6c quadrature_transform() {
  Matrix6c t = Matrix6c::Zero();
  for (int k = 0; k < 3; ++k) {
    t(2 * k, k) = kInvSqrt2;
    t(2 * k, 3 + k) = kInvSqrt2;
    t(2 * k + 1, k) = Complex(0.0, -kInvSqrt2);
    t(2 * k + 1, 3 + k) = Complex(0.0, kInvSqrt2);
  }
  return t;
}

}  // namespace

double BogoliubovMap::symplectic_defect() const {
  const Matrix6c k = metric();
  return (coefficients * k * coefficients.transpose() - k).cwiseAbs().maxCoeff();
}

Eigen::Matrix<double, 6, 6> BogoliubovMap::quadrature_matrix() const {
  const Matrix6c t = quadrature_transform();
  const Matrix6c s = t * coefficients * t.inverse();
  return s.real();
}

BogoliubovMap propagator(double theta1, double theta2, double t) {
  require_elliptic(theta1, theta2, "propagator");
  if (!std::isfinite(t)) throw InvalidArgument("propagator: t must be finite");
  const double t1 = theta1;
  const double t2 = theta2;
  const double big2 = t2 * t2 - t1 * t1;
  const double big = std::sqrt(big2);
  const double c = std::cos(big * t);
  const double s = std::sin(big * t);
  const Complex i(0.0, 1.0);

  Matrix6c m = Matrix6c::Zero();
  // a1
  m(0, 0) = (t2 * t2 - t1 * t1 * c) / big2;
  m(0, 4) = t1 * t2 * (1.0 - c) / big2;
  m(0, 5) = i * t1 * s / big;
  // a2
  m(1, 1) = -(t1 * t1 - t2 * t2 * c) / big2;
  m(1, 3) = -t1 * t2 * (1.0 - c) / big2;
  m(1, 2) = i * t2 * s / big;
  // b
  m(2, 2) = c;
  m(2, 1) = i * t2 * s / big;
  m(2, 3) = i * t1 * s / big;
  // daggered rows
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      m(3 + r, 3 + col) = std::conj(m(r, col));
      m(3 + r, col) = std::conj(m(r, 3 + col));
    }
  }
  return {m, t};
}

double half_period(double theta1, double theta2) {
  require_elliptic(theta1, theta2, "half_period");
  return std::numbers::pi / std::sqrt(theta2 * theta2 - theta1 * theta1);
}

double squeeze_parameter(double theta1, double theta2, Scheme scheme) {
  if (scheme == Scheme::kA) {
    require_elliptic(theta1, theta2, "squeeze_parameter");
    if (theta1 == 0.0) return 0.0;
    const double r = std::abs(theta2 / theta1);
    const double arg = 2.0 * r / (1.0 + r * r);
    if (!(arg < 1.0)) {
      throw InvalidArgument("squeeze_parameter: r too close to 1");
    }
    return std::atanh(arg);
  }
  if (!(theta2 > 0.0) || !(std::abs(theta1) < theta2)) {
    throw InvalidArgument("squeeze_parameter: scheme B requires theta2 > "
                          "|theta1|");
  }
  return std::atanh(theta1 / theta2);
}

gaussian::GaussianState apply_to_gaussian(const BogoliubovMap& map,
                                          const gaussian::GaussianState& g) {
  if (g.mean.size() != 6 || g.cov.rows() != 6 || g.cov.cols() != 6) {
    throw InvalidArgument("apply_to_gaussian: state must have exactly 3 modes "
                          "(c1, c2, m)");
  }
  const Matrix6d s = map.quadrature_matrix();
  gaussian::GaussianState out{s * g.mean, s * g.cov * s.transpose()};
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
  return out;
}

}  // namespace cavem::closedform
