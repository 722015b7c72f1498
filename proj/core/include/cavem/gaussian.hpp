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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cavem/fock.hpp"
#include "cavem/model.hpp"

/// Gaussian moment dynamics for quadratic Hamiltonians and linear channels.
///
/// Convention: X = (a + a^dag)/sqrt2, P = -i(a - a^dag)/sqrt2, quadratures
/// ordered (X1, P1, X2, P2, ...), covariance sigma_ij = <{dR_i, dR_j}>/2 so
/// that the vacuum has sigma = I/2.
namespace cavem::gaussian {

struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  std::size_t num_modes() const {
    return static_cast<std::size_t>(mean.size() / 2);
  }

  static GaussianState vacuum(std::size_t n_modes);
  static GaussianState thermal(std::span<const double> occupations);

  /// Throws InvalidArgument if cov is not symmetric within 1e-12 (scaled by
  /// its magnitude) or violates cov + (i/2) Omega >= -tol.
  void validate(double tol = 1e-8) const;
  /// Smallest eigenvalue of the Hermitian matrix cov + (i/2) Omega.
  double uncertainty_margin() const;

  /// Marginal on the listed modes, in the listed order.
  GaussianState reduced(std::span<const std::size_t> modes) const;
};

/// d<R>/dt = A <R>,  d sigma/dt = A sigma + sigma A^T + D.
struct DriftDiffusion {
  Eigen::MatrixXd drift;
  Eigen::MatrixXd diffusion;

  std::size_t num_modes() const {
    return static_cast<std::size_t>(drift.rows() / 2);
  }
};

/// Symplectic form, block diagonal with [[0, 1], [-1, 0]] per mode.
Eigen::MatrixXd symplectic_form(std::size_t n_modes);

/// Builds A and D term by term from the couplings and channels of `spec`,
/// in the mode order of `spec.modes`.
DriftDiffusion drift_diffusion(const model::SystemSpec& spec);

/// Largest real part among the eigenvalues of A.
double spectral_abscissa(const Eigen::MatrixXd& a);
bool is_hurwitz(const Eigen::MatrixXd& a);

struct MomentOptions {
  /// RK4 step; <= 0 selects 0.002 / max(1, |A|_inf). With step <= 0,
  /// stroboscopic_moments uses exact per-half-cycle propagators instead.
  double step = 0.0;
};

/// RK4 integration of the moment equations, sampled at `t_grid`
/// (non-decreasing, starting at or after 0). Throws NumericalError if the
/// covariance loses symmetry beyond 1e-8.
std::vector<GaussianState> evolve_moments(const DriftDiffusion& dd,
                                          const GaussianState& g0,
                                          std::span<const double> t_grid,
                                          const MomentOptions& opts = {});

/// Alternates dd_a and dd_b for delta_t each, n_cycles times; returns the
/// state after every full cycle (n_cycles entries).
std::vector<GaussianState> stroboscopic_moments(const DriftDiffusion& dd_a,
                                                const DriftDiffusion& dd_b,
                                                double delta_t, int n_cycles,
                                                const GaussianState& g0,
                                                const MomentOptions& opts = {});

/// Solves A sigma + sigma A^T + D = 0 by a dense vectorized solve; mean 0.
/// Throws NumericalError if A is not Hurwitz.
GaussianState lyapunov_steady(const DriftDiffusion& dd);

/// max |A sigma + sigma A^T + D|.
double lyapunov_residual(const DriftDiffusion& dd, const Eigen::MatrixXd& cov);

/// First and symmetrized second quadrature moments of a Fock state on the
/// listed modes.
GaussianState gaussian_from_fock(const fock::QuantumState& state,
                                 std::span<const std::string> modes);

}  // namespace cavem::gaussian
