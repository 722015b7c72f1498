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

#include "cavem/gaussian.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include "cavem/error.hpp"

namespace cavem::gaussian {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Coefficients c with a_k = c . R.
CVec lowering_vector(std::size_t n_modes, std::size_t k) {
  CVec c = CVec::Zero(static_cast<Eigen::Index>(2 * n_modes));
  c(static_cast<Eigen::Index>(2 * k)) = {kInvSqrt2, 0.0};
  c(static_cast<Eigen::Index>(2 * k + 1)) = {0.0, kInvSqrt2};
  return c;
}

void add_channel(Eigen::MatrixXcd& c_mat, const CVec& c, double rate) {
  c_mat += rate * (c * c.adjoint());
}

MatrixXd symmetrize(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

double asymmetry(const MatrixXd& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

void check_symmetry(const MatrixXd& cov, double t) {
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  const double defect = asymmetry(cov) / scale;
  if (!(defect <= 1e-8)) {
    std::ostringstream msg;
    msg << "evolve_moments: covariance lost symmetry at t=" << t
        << " (defect " << defect << "); reduce the step";
    throw NumericalError(msg.str());
  }
}

double auto_step(const DriftDiffusion& dd, const MomentOptions& opts) {
  if (opts.step > 0.0) return opts.step;
  const double norm = dd.drift.cwiseAbs().rowwise().sum().maxCoeff();
  return 0.002 / std::max(1.0, norm);
}

void rk4_advance(const DriftDiffusion& dd, VectorXd& mean, MatrixXd& cov,
                 double duration, double h_max) {
  if (duration <= 0.0) return;
  const auto n_steps =
      static_cast<long>(std::max(1.0, std::ceil(duration / h_max - 1e-9)));
  const double h = duration / static_cast<double>(n_steps);
  const MatrixXd& a = dd.drift;
  const MatrixXd& d = dd.diffusion;
  auto f = [&](const MatrixXd& s) -> MatrixXd {
    MatrixXd as = a * s;
    return as + as.transpose() + d;
  };
  // Kahan-compensated accumulation; long runs otherwise drift by ~N eps |cov|
  VectorXd mean_c = VectorXd::Zero(mean.size());
  MatrixXd cov_c = MatrixXd::Zero(cov.rows(), cov.cols());
  auto accumulate = [](auto& x, auto& c, const auto& dx) {
    const auto y = (dx - c).eval();
    const auto next = (x + y).eval();
    c = (next - x) - y;
    x = next;
  };
  for (long i = 0; i < n_steps; ++i) {
    const VectorXd m1 = a * mean;
    const VectorXd m2 = a * (mean + 0.5 * h * m1);
    const VectorXd m3 = a * (mean + 0.5 * h * m2);
    const VectorXd m4 = a * (mean + h * m3);
    accumulate(mean, mean_c, ((h / 6.0) * (m1 + 2.0 * m2 + 2.0 * m3 + m4)).eval());

    const MatrixXd k1 = f(cov);
    const MatrixXd k2 = f(cov + 0.5 * h * k1);
    const MatrixXd k3 = f(cov + 0.5 * h * k2);
    const MatrixXd k4 = f(cov + h * k3);
    accumulate(cov, cov_c, ((h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).eval());
  }
}

// Exact affine propagator of the vectorized covariance equation over `dt`.
struct ExactStep {
  MatrixXd mean_map;  // e^{A dt}
  MatrixXd cov_map;   // acts on vec(sigma) with a trailing 1
  Eigen::Index n = 0;

  ExactStep(const DriftDiffusion& dd, double dt) {
    n = dd.drift.rows();
    mean_map = (dd.drift * dt).exp();
    const Eigen::Index nn = n * n;
    MatrixXd gen = MatrixXd::Zero(nn + 1, nn + 1);
    const MatrixXd id = MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        // I (x) A  +  A (x) I, column-major vec.
        gen.block(j * n, j * n, n, n) += id(i, j) * dd.drift;
        gen.block(i * n, j * n, n, n) += dd.drift(i, j) * id;
      }
    }
    gen.block(0, nn, nn, 1) =
        Eigen::Map<const VectorXd>(dd.diffusion.data(), nn);
    cov_map = (gen * dt).exp();
  }

  void apply(VectorXd& mean, MatrixXd& cov) const {
    mean = mean_map * mean;
    VectorXd v(n * n + 1);
    v.head(n * n) = Eigen::Map<const VectorXd>(cov.data(), n * n);
    v(n * n) = 1.0;
    const VectorXd w = cov_map * v;
    cov = Eigen::Map<const MatrixXd>(w.data(), n, n);
  }
};

void check_dims(const DriftDiffusion& dd, const GaussianState& g) {
  if (dd.drift.rows() != g.mean.size() || dd.drift.cols() != g.mean.size() ||
      dd.diffusion.rows() != g.mean.size() || g.cov.rows() != g.mean.size()) {
    throw InvalidArgument("gaussian: drift/diffusion and state dimensions "
                          "disagree");
  }
}

}  // namespace

GaussianState GaussianState::vacuum(std::size_t n_modes) {
  const auto n = static_cast<Eigen::Index>(2 * n_modes);
  return {VectorXd::Zero(n), 0.5 * MatrixXd::Identity(n, n)};
}

GaussianState GaussianState::thermal(std::span<const double> occupations) {
  auto g = vacuum(occupations.size());
  for (std::size_t k = 0; k < occupations.size(); ++k) {
    if (!(occupations[k] >= 0.0)) {
      throw InvalidArgument("GaussianState::thermal: occupation must be >= 0");
    }
    const auto i = static_cast<Eigen::Index>(2 * k);
    g.cov(i, i) = g.cov(i + 1, i + 1) = occupations[k] + 0.5;
  }
  return g;
}

double GaussianState::uncertainty_margin() const {
  const auto n = static_cast<Eigen::Index>(cov.rows());
  Eigen::MatrixXcd h(n, n);
  const MatrixXd omega = symplectic_form(num_modes());
  h.real() = cov;
  h.imag() = 0.5 * omega;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void GaussianState::validate(double tol) const {
  if (mean.size() % 2 != 0 || cov.rows() != mean.size() ||
      cov.cols() != mean.size()) {
    throw InvalidArgument("GaussianState: inconsistent dimensions");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if (asymmetry(cov) > 1e-12 * scale) {
    throw InvalidArgument("GaussianState: covariance not symmetric");
  }
  const double margin = uncertainty_margin();
  if (margin < -tol) {
    std::ostringstream msg;
    msg << "GaussianState: uncertainty principle violated (min eigenvalue "
        << margin << ")";
    throw InvalidArgument(msg.str());
  }
}

GaussianState GaussianState::reduced(std::span<const std::size_t> modes) const {
  const auto n = static_cast<Eigen::Index>(2 * modes.size());
  GaussianState out{VectorXd(n), MatrixXd(n, n)};
  for (std::size_t a = 0; a < modes.size(); ++a) {
    if (modes[a] >= num_modes()) {
      throw InvalidArgument("GaussianState::reduced: mode out of range");
    }
    for (int qa = 0; qa < 2; ++qa) {
      const auto ia = static_cast<Eigen::Index>(2 * a + qa);
      const auto sa = static_cast<Eigen::Index>(2 * modes[a] + qa);
      out.mean(ia) = mean(sa);
      for (std::size_t b = 0; b < modes.size(); ++b) {
        for (int qb = 0; qb < 2; ++qb) {
          out.cov(ia, static_cast<Eigen::Index>(2 * b + qb)) =
              cov(sa, static_cast<Eigen::Index>(2 * modes[b] + qb));
        }
      }
    }
  }
  return out;
}

MatrixXd symplectic_form(std::size_t n_modes) {
  const auto n = static_cast<Eigen::Index>(2 * n_modes);
  MatrixXd omega = MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

DriftDiffusion drift_diffusion(const model::SystemSpec& spec) {
  spec.validate();
  const std::size_t nm = spec.modes.size();
  const auto n = static_cast<Eigen::Index>(2 * nm);

  // H = (1/2) R^T hq R + const
  MatrixXd hq = MatrixXd::Zero(n, n);
  for (const auto& c : spec.couplings) {
    const CVec u = lowering_vector(nm, spec.mode_index(c.mode_i));
    CVec v = lowering_vector(nm, spec.mode_index(c.mode_j));
    if (c.kind == model::CouplingKind::kTwoModeSqueeze) v = v.conjugate();
    // pair = e^{i phase} a_i^dag (a_j or a_j^dag) = R^T m R
    const Eigen::MatrixXcd m =
        std::polar(1.0, c.phase) * (u.conjugate() * v.transpose());
    const MatrixXd re = m.real();
    hq -= 2.0 * c.strength * (re + re.transpose());
  }

  Eigen::MatrixXcd c_mat = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& ch : spec.channels) {
    if (const auto* local = std::get_if<model::LocalChannel>(&ch)) {
      const CVec c = lowering_vector(nm, spec.mode_index(local->mode));
      add_channel(c_mat, c, local->down_rate);
      add_channel(c_mat, c.conjugate(), local->up_rate);
      continue;
    }
    const auto& col = std::get<model::CollectiveChannel>(ch);
    CVec c = CVec::Zero(n);
    for (const auto& t : col.terms) {
      const CVec low = lowering_vector(nm, spec.mode_index(t.mode));
      c += t.lower * low + t.raise * low.conjugate();
    }
    add_channel(c_mat, c, col.rate);
  }

  const MatrixXd omega = symplectic_form(nm);
  DriftDiffusion dd;
  dd.drift = omega * (hq - MatrixXd(c_mat.imag()));
  dd.diffusion = symmetrize(omega * MatrixXd(c_mat.real()) * omega.transpose());
  return dd;
}

double spectral_abscissa(const MatrixXd& a) {
  Eigen::EigenSolver<MatrixXd> es(a, false);
  return es.eigenvalues().real().maxCoeff();
}

bool is_hurwitz(const MatrixXd& a) { return spectral_abscissa(a) < 0.0; }

std::vector<GaussianState> evolve_moments(const DriftDiffusion& dd,
                                          const GaussianState& g0,
                                          std::span<const double> t_grid,
                                          const MomentOptions& opts) {
  check_dims(dd, g0);
  std::vector<GaussianState> out;
  out.reserve(t_grid.size());
  VectorXd mean = g0.mean;
  MatrixXd cov = g0.cov;
  const double h = auto_step(dd, opts);
  double t = 0.0;
  for (double target : t_grid) {
    if (target < t) {
      throw InvalidArgument("evolve_moments: t_grid must be non-decreasing "
                            "and start at or after 0");
    }
    rk4_advance(dd, mean, cov, target - t, h);
    check_symmetry(cov, target);
    cov = symmetrize(cov);
    t = target;
    out.push_back({mean, cov});
  }
  return out;
}

std::vector<GaussianState> stroboscopic_moments(const DriftDiffusion& dd_a,
                                                const DriftDiffusion& dd_b,
                                                double delta_t, int n_cycles,
                                                const GaussianState& g0,
                                                const MomentOptions& opts) {
  check_dims(dd_a, g0);
  check_dims(dd_b, g0);
  if (!(delta_t > 0.0)) {
    throw InvalidArgument("stroboscopic_moments: delta_t must be positive");
  }
  if (n_cycles < 0) {
    throw InvalidArgument("stroboscopic_moments: n_cycles must be >= 0");
  }
  std::vector<GaussianState> out;
  out.reserve(static_cast<std::size_t>(n_cycles));
  VectorXd mean = g0.mean;
  MatrixXd cov = g0.cov;
  if (opts.step > 0.0) {
    for (int c = 0; c < n_cycles; ++c) {
      rk4_advance(dd_a, mean, cov, delta_t, opts.step);
      rk4_advance(dd_b, mean, cov, delta_t, opts.step);
      check_symmetry(cov, 2.0 * delta_t * (c + 1));
      cov = symmetrize(cov);
      out.push_back({mean, cov});
    }
    return out;
  }
  // Each half-cycle is time independent, so its exact propagator is reused.
  const ExactStep step_a(dd_a, delta_t);
  const ExactStep step_b(dd_b, delta_t);
  for (int c = 0; c < n_cycles; ++c) {
    step_a.apply(mean, cov);
    step_b.apply(mean, cov);
    check_symmetry(cov, 2.0 * delta_t * (c + 1));
    cov = symmetrize(cov);
    out.push_back({mean, cov});
  }
  return out;
}

GaussianState lyapunov_steady(const DriftDiffusion& dd) {
  const double abscissa = spectral_abscissa(dd.drift);
  if (!(abscissa < 0.0)) {
    std::ostringstream msg;
    msg << "lyapunov_steady: drift matrix is not Hurwitz (max Re eigenvalue "
        << abscissa << "); no steady state";
    throw NumericalError(msg.str());
  }
  const Eigen::Index n = dd.drift.rows();
  const MatrixXd id = MatrixXd::Identity(n, n);
  MatrixXd k = MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      k.block(j * n, j * n, n, n) += id(i, j) * dd.drift;
      k.block(i * n, j * n, n, n) += dd.drift(i, j) * id;
    }
  }
  const VectorXd rhs = -Eigen::Map<const VectorXd>(dd.diffusion.data(), n * n);
  const VectorXd sol = k.fullPivLu().solve(rhs);
  MatrixXd cov = Eigen::Map<const MatrixXd>(sol.data(), n, n);
  return {VectorXd::Zero(n), symmetrize(cov)};
}

double lyapunov_residual(const DriftDiffusion& dd, const MatrixXd& cov) {
  return (dd.drift * cov + cov * dd.drift.transpose() + dd.diffusion)
      .cwiseAbs()
      .maxCoeff();
}

GaussianState gaussian_from_fock(const fock::QuantumState& state,
                                 std::span<const std::string> modes) {
  std::vector<std::size_t> idx;
  for (const auto& label : modes) idx.push_back(state.space().mode_index(label));
  const fock::LadderMoments lm = fock::ladder_moments(state, idx);
  const std::size_t nm = idx.size();
  const auto n = static_cast<Eigen::Index>(nm);

  // xi = (a_1..a_N, a_1^dag..a_N^dag), G_ab = <xi_a xi_b>
  Eigen::MatrixXcd g(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto uj = static_cast<std::size_t>(j);
      const auto uk = static_cast<std::size_t>(k);
      g(j, k) = lm.aa[uj][uk];
      g(j, n + k) = lm.ad[uk][uj] + (j == k ? 1.0 : 0.0);
      g(n + j, k) = lm.ad[uj][uk];
      g(n + j, n + k) = std::conj(lm.aa[uk][uj]);
    }
  }
  // R = T xi
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  Eigen::VectorXcd xi_mean(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    t(2 * k, k) = kInvSqrt2;
    t(2 * k, n + k) = kInvSqrt2;
    t(2 * k + 1, k) = {0.0, -kInvSqrt2};
    t(2 * k + 1, n + k) = {0.0, kInvSqrt2};
    xi_mean(k) = lm.mean[static_cast<std::size_t>(k)];
    xi_mean(n + k) = std::conj(lm.mean[static_cast<std::size_t>(k)]);
  }
  const Eigen::MatrixXcd second = t * g * t.transpose();
  const VectorXd mean = (t * xi_mean).real();
  MatrixXd sym = 0.5 * (second + second.transpose()).real();
  MatrixXd cov = sym - mean * mean.transpose();
  return {mean, symmetrize(cov)};
}

}  // namespace cavem::gaussian
