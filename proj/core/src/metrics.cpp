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

#include "cavem/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "cavem/error.hpp"

namespace cavem::metrics {

namespace {

constexpr double kMeanTolerance = 1e-6;

double variance(const gaussian::GaussianState& g,
                const std::array<double, 4>& w, std::size_t m1,
                std::size_t m2) {
  const std::array<Eigen::Index, 4> idx = {
      static_cast<Eigen::Index>(2 * m1), static_cast<Eigen::Index>(2 * m2),
      static_cast<Eigen::Index>(2 * m1 + 1),
      static_cast<Eigen::Index>(2 * m2 + 1)};
  // u uses the first two weights on X, v the last two on P.
  double u = 0.0;
  double v = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      u += w[a] * w[b] * g.cov(idx[a], idx[b]);
      v += w[2 + a] * w[2 + b] * g.cov(idx[2 + a], idx[2 + b]);
    }
  }
  return u + v;
}

void require_zero_mean(const gaussian::GaussianState& g, const char* where) {
  const double m = g.mean.size() ? g.mean.cwiseAbs().maxCoeff() : 0.0;
  if (m > kMeanTolerance) {
    std::ostringstream msg;
    msg << where << ": Gaussian fidelity needs a zero-mean state (|mean| = "
        << m << ")";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

DuanResult duan_variance(const gaussian::GaussianState& g, std::size_t mode1,
                         std::size_t mode2) {
  if (g.num_modes() < 2) {
    throw InvalidArgument("duan_variance: needs at least two modes");
  }
  if (mode1 >= g.num_modes() || mode2 >= g.num_modes() || mode1 == mode2) {
    throw InvalidArgument("duan_variance: invalid mode pair");
  }
  DuanResult r;
  r.v_minus = variance(g, {1.0, -1.0, 1.0, 1.0}, mode1, mode2);
  r.v_plus = variance(g, {1.0, 1.0, 1.0, -1.0}, mode1, mode2);
  r.v_min = std::min(r.v_minus, r.v_plus);
  r.entangled = r.v_min < 2.0;
  return r;
}

DuanResult duan_variance(const fock::QuantumState& state,
                         const std::string& label1, const std::string& label2) {
  const std::vector<std::string> labels = {label1, label2};
  if (label1 == label2) {
    throw InvalidArgument("duan_variance: invalid mode pair");
  }
  return duan_variance(gaussian::gaussian_from_fock(state, labels), 0, 1);
}

gaussian::GaussianState tmsv_gaussian(double zeta, int sign) {
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
    throw InvalidArgument("tmsv_gaussian: zeta must be >= 0");
  }
  if (sign != 1 && sign != -1) {
    throw InvalidArgument("tmsv_gaussian: sign must be +1 or -1");
  }
  auto g = gaussian::GaussianState::vacuum(2);
  const double c = 0.5 * std::cosh(2.0 * zeta);
  const double s = 0.5 * sign * std::sinh(2.0 * zeta);
  g.cov.diagonal().setConstant(c);
  g.cov(0, 2) = g.cov(2, 0) = s;
  g.cov(1, 3) = g.cov(3, 1) = -s;
  return g;
}

double fidelity_with_tmsv(const fock::QuantumState& state, double zeta,
                          int sign, double tail_tolerance) {
  if (state.space().num_modes() != 2) {
    throw InvalidArgument("fidelity_with_tmsv: requires a two-mode state");
  }
  const auto target =
      fock::tmsv_state(state.space(), zeta, sign, tail_tolerance);
  const CVector& psi = target.amplitudes();
  double f = 0.0;
  if (state.is_pure()) {
    f = std::norm(psi.dot(state.amplitudes()));
  } else {
    f = psi.dot(state.density() * psi).real();
  }
  return std::clamp(f, 0.0, 1.0);
}

double fidelity_with_pure(const gaussian::GaussianState& g,
                          const gaussian::GaussianState& pure_target) {
  if (g.mean.size() != pure_target.mean.size()) {
    throw InvalidArgument("fidelity_with_pure: mode count mismatch");
  }
  require_zero_mean(g, "fidelity_with_pure");
  require_zero_mean(pure_target, "fidelity_with_pure");
  const double det = (g.cov + pure_target.cov).determinant();
  if (!(det > 0.0)) {
    throw NumericalError("fidelity_with_pure: singular covariance sum");
  }
  return std::clamp(1.0 / std::sqrt(det), 0.0, 1.0);
}

double fidelity_with_tmsv(const gaussian::GaussianState& g, double zeta,
                          int sign) {
  if (g.num_modes() != 2) {
    throw InvalidArgument("fidelity_with_tmsv: requires a two-mode state");
  }
  return fidelity_with_pure(g, tmsv_gaussian(zeta, sign));
}

std::vector<double> occupations(const gaussian::GaussianState& g) {
  std::vector<double> n(g.num_modes());
  for (std::size_t k = 0; k < n.size(); ++k) {
    const auto x = static_cast<Eigen::Index>(2 * k);
    n[k] = 0.5 * (g.cov(x, x) + g.cov(x + 1, x + 1) - 1.0) +
           0.5 * (g.mean(x) * g.mean(x) + g.mean(x + 1) * g.mean(x + 1));
  }
  return n;
}

std::vector<double> occupations(const fock::QuantumState& state) {
  const auto& space = state.space();
  std::vector<double> n(space.num_modes(), 0.0);
  for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
    const double p = state.is_pure() ? std::norm(state.amplitudes()(i))
                                     : state.density()(i, i).real();
    if (p == 0.0) continue;
    for (std::size_t k = 0; k < n.size(); ++k) {
      n[k] += p * space.occupation(i, k);
    }
  }
  return n;
}

double purity(const gaussian::GaussianState& g) {
  const double det = g.cov.determinant();
  if (!(det > 0.0)) throw NumericalError("purity: singular covariance");
  return 1.0 / (std::pow(2.0, static_cast<double>(g.num_modes())) *
                std::sqrt(det));
}

double purity(const fock::QuantumState& state) {
  if (state.is_pure()) return state.amplitudes().squaredNorm();
  return state.density().squaredNorm();
}

}  // namespace cavem::metrics
