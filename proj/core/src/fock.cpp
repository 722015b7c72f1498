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

#include "cavem/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "cavem/error.hpp"

namespace cavem::fock {

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kEigenTol = 1e-8;

void require_same_space(const FockSpace& a, const FockSpace& b,
                        const char* what) {
  if (!(a == b)) {
    throw InvalidArgument(std::string(what) + ": Fock spaces differ");
  }
}

// Tr(a_k m) in O(d).
Complex trace_lowering(const FockSpace& space, std::size_t mode,
                       const CMatrix& m) {
  const Eigen::Index s = space.stride(mode);
  const int top = space.dim(mode) - 1;
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
    const int n = space.occupation(i, mode);
    if (n < top) acc += std::sqrt(double(n + 1)) * m(i + s, i);
  }
  return acc;
}

// Tr(a_k^dag m) in O(d).
Complex trace_raising(const FockSpace& space, std::size_t mode,
                      const CMatrix& m) {
  const Eigen::Index s = space.stride(mode);
  const int top = space.dim(mode) - 1;
  Complex acc{0.0, 0.0};
  for (Eigen::Index l = 0; l < space.total_dim(); ++l) {
    const int n = space.occupation(l, mode);
    if (n < top) acc += std::sqrt(double(n + 1)) * m(l, l + s);
  }
  return acc;
}

}  // namespace

FockSpace::FockSpace(std::vector<int> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw InvalidArgument("FockSpace: no modes");
  if (labels_.size() != dims_.size()) {
    throw InvalidArgument("FockSpace: " + std::to_string(labels_.size()) +
                          " labels for " + std::to_string(dims_.size()) +
                          " modes");
  }
  std::set<std::string> seen;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] < 2) {
      throw InvalidArgument("FockSpace: mode '" + labels_[k] +
                            "' has dimension " + std::to_string(dims_[k]) +
                            " (< 2)");
    }
    if (!seen.insert(labels_[k]).second) {
      throw InvalidArgument("FockSpace: duplicate label '" + labels_[k] + "'");
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 0;) {
    strides_[k] = total_dim_;
    total_dim_ *= dims_[k];
  }
}

bool FockSpace::has_mode(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t FockSpace::mode_index(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown mode label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

FockSpace make_space(std::vector<int> dims, std::vector<std::string> labels) {
  return FockSpace(std::move(dims), std::move(labels));
}

Operator::Operator(FockSpace space, CMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const auto d = space_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw InvalidArgument("Operator: matrix is " +
                          std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) +
                          ", space dimension is " + std::to_string(d));
  }
}

Operator Operator::adjoint() const { return {space_, matrix_.adjoint()}; }

bool Operator::is_hermitian(double tol) const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_space(space_, other.space_, "Operator +");
  matrix_ += other.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_space(space_, other.space_, "Operator -");
  matrix_ -= other.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "Operator *");
  return {a.space(), a.matrix() * b.matrix()};
}

Operator identity(const FockSpace& space) {
  const auto d = space.total_dim();
  return {space, CMatrix::Identity(d, d)};
}

Operator zero_operator(const FockSpace& space) {
  const auto d = space.total_dim();
  return {space, CMatrix::Zero(d, d)};
}

Operator annihilation(const FockSpace& space, std::string_view label) {
  const std::size_t k = space.mode_index(label);
  const auto d = space.total_dim();
  const Eigen::Index s = space.stride(k);
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const int n = space.occupation(i, k);
    if (n > 0) m(i - s, i) = std::sqrt(double(n));
  }
  return {space, std::move(m)};
}

Operator creation(const FockSpace& space, std::string_view label) {
  return annihilation(space, label).adjoint();
}

Operator number(const FockSpace& space, std::string_view label) {
  const std::size_t k = space.mode_index(label);
  const auto d = space.total_dim();
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = space.occupation(i, k);
  return {space, std::move(m)};
}

QuantumState QuantumState::pure(FockSpace space, CVector amplitudes) {
  if (amplitudes.size() != space.total_dim()) {
    throw InvalidArgument("QuantumState: vector length " +
                          std::to_string(amplitudes.size()) +
                          " does not match space dimension " +
                          std::to_string(space.total_dim()));
  }
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kStateTol) {
    std::ostringstream msg;
    msg << "QuantumState: pure vector has norm " << norm;
    throw InvalidArgument(msg.str());
  }
  return {std::move(space), std::move(amplitudes)};
}

QuantumState QuantumState::mixed(FockSpace space, CMatrix rho, Check check) {
  const auto d = space.total_dim();
  if (rho.rows() != d || rho.cols() != d) {
    throw InvalidArgument("QuantumState: density matrix shape mismatch");
  }
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kStateTol) {
    std::ostringstream msg;
    msg << "QuantumState: density matrix not Hermitian (defect " << asym
        << ")";
    throw InvalidArgument(msg.str());
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kStateTol) {
    std::ostringstream msg;
    msg << "QuantumState: trace " << tr << " differs from 1";
    throw InvalidArgument(msg.str());
  }
  if (check == Check::kFull) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -kEigenTol) {
      std::ostringstream msg;
      msg << "QuantumState: smallest eigenvalue " << lo << " is negative";
      throw InvalidArgument(msg.str());
    }
  }
  return {std::move(space), std::move(rho)};
}

const CVector& QuantumState::amplitudes() const {
  if (!is_pure()) throw InvalidArgument("QuantumState: state is mixed");
  return std::get<CVector>(repr_);
}

const CMatrix& QuantumState::density() const {
  if (is_pure()) throw InvalidArgument("QuantumState: state is pure");
  return std::get<CMatrix>(repr_);
}

CMatrix QuantumState::density_matrix() const {
  if (is_pure()) {
    const auto& psi = std::get<CVector>(repr_);
    return psi * psi.adjoint();
  }
  return std::get<CMatrix>(repr_);
}

QuantumState vacuum(const FockSpace& space) {
  CVector psi = CVector::Zero(space.total_dim());
  psi(0) = 1.0;
  return QuantumState::pure(space, std::move(psi));
}

QuantumState thermal_state(const FockSpace& space,
                           std::span<const double> occupations,
                           double tail_tolerance) {
  if (occupations.size() != space.num_modes()) {
    throw InvalidArgument("thermal_state: expected " +
                          std::to_string(space.num_modes()) +
                          " occupations, got " +
                          std::to_string(occupations.size()));
  }
  std::vector<std::vector<double>> probs(space.num_modes());
  for (std::size_t k = 0; k < space.num_modes(); ++k) {
    const double nbar = occupations[k];
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
      throw InvalidArgument("thermal_state: occupation of '" +
                            space.labels()[k] + "' must be >= 0");
    }
    const int dim = space.dim(k);
    const double q = nbar / (1.0 + nbar);
    const double tail = std::pow(q, dim);
    if (tail > tail_tolerance) {
      std::ostringstream msg;
      msg << "thermal_state: truncation too small for mode '"
          << space.labels()[k] << "' (dim " << dim << ", nbar " << nbar
          << ", tail mass " << tail << " > " << tail_tolerance << ")";
      throw TruncationError(msg.str());
    }
    auto& p = probs[k];
    p.resize(dim);
    double pn = 1.0 / (1.0 + nbar);
    for (int n = 0; n < dim; ++n, pn *= q) p[n] = pn;
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= total;
  }
  const auto d = space.total_dim();
  CMatrix rho = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double w = 1.0;
    for (std::size_t k = 0; k < space.num_modes(); ++k) {
      w *= probs[k][space.occupation(i, k)];
    }
    rho(i, i) = w;
  }
  rho /= rho.trace().real();
  return QuantumState::mixed(space, std::move(rho), QuantumState::Check::kCheap);
}

QuantumState tmsv_state(const FockSpace& space, double zeta, int sign,
                        double tail_tolerance) {
  if (space.num_modes() != 2) {
    throw InvalidArgument("tmsv_state: requires exactly two modes");
  }
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) {
    throw InvalidArgument("tmsv_state: zeta must be >= 0");
  }
  if (sign != 1 && sign != -1) {
    throw InvalidArgument("tmsv_state: sign must be +1 or -1");
  }
  const int nmax = std::min(space.dim(0), space.dim(1));
  const double t = std::tanh(zeta);
  const double tail = std::pow(t, 2 * nmax);
  if (tail > tail_tolerance) {
    std::ostringstream msg;
    msg << "tmsv_state: truncation too small (min dim " << nmax
        << ", tail mass " << tail << " > " << tail_tolerance << ")";
    throw TruncationError(msg.str());
  }
  CVector psi = CVector::Zero(space.total_dim());
  double c = 1.0 / std::cosh(zeta);
  for (int n = 0; n < nmax; ++n, c *= sign * t) {
    psi(n * space.stride(0) + n * space.stride(1)) = c;
  }
  psi.normalize();
  return QuantumState::pure(space, std::move(psi));
}

Complex expectation(const Operator& op, const QuantumState& state) {
  require_same_space(op.space(), state.space(), "expectation");
  if (state.is_pure()) {
    const auto& psi = state.amplitudes();
    return psi.dot(op.matrix() * psi);
  }
  // Tr(rho O) without forming the product.
  return (state.density().transpose().cwiseProduct(op.matrix())).sum();
}

QuantumState partial_trace(const QuantumState& state,
                           std::span<const std::string> keep) {
  const FockSpace& space = state.space();
  std::vector<std::size_t> kept;
  for (const auto& label : keep) kept.push_back(space.mode_index(label));
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InvalidArgument("partial_trace: duplicate mode in keep list");
  }
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < space.num_modes(); ++k) {
    if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);
  }
  std::vector<int> kdims;
  std::vector<std::string> klabels;
  for (auto k : kept) {
    kdims.push_back(space.dim(k));
    klabels.push_back(space.labels()[k]);
  }
  FockSpace reduced(kdims, klabels);
  if (traced.empty()) return state;

  Eigen::Index dt = 1;
  for (auto k : traced) dt *= space.dim(k);
  const Eigen::Index dk = reduced.total_dim();

  // index[kk + dk * tt] = parent index of (kept config kk, traced config tt)
  std::vector<Eigen::Index> index(static_cast<std::size_t>(dk * dt));
  for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
    Eigen::Index kk = 0, tt = 0;
    for (auto k : kept) kk = kk * space.dim(k) + space.occupation(i, k);
    for (auto k : traced) tt = tt * space.dim(k) + space.occupation(i, k);
    index[static_cast<std::size_t>(kk + dk * tt)] = i;
  }

  CMatrix out = CMatrix::Zero(dk, dk);
  if (state.is_pure()) {
    const auto& psi = state.amplitudes();
    CMatrix block(dk, dt);
    for (Eigen::Index tt = 0; tt < dt; ++tt) {
      for (Eigen::Index kk = 0; kk < dk; ++kk) {
        block(kk, tt) = psi(index[static_cast<std::size_t>(kk + dk * tt)]);
      }
    }
    out = block * block.adjoint();
  } else {
    const auto& rho = state.density();
    for (Eigen::Index tt = 0; tt < dt; ++tt) {
      const Eigen::Index* row = &index[static_cast<std::size_t>(dk * tt)];
      for (Eigen::Index b = 0; b < dk; ++b) {
        for (Eigen::Index a = 0; a < dk; ++a) out(a, b) += rho(row[a], row[b]);
      }
    }
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return QuantumState::mixed(std::move(reduced), std::move(out),
                             QuantumState::Check::kCheap);
}

double trace_distance(const QuantumState& a, const QuantumState& b) {
  require_same_space(a.space(), b.space(), "trace_distance");
  const CMatrix diff = a.density_matrix() - b.density_matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

CMatrix apply_lowering(const FockSpace& space, std::size_t mode,
                       const CMatrix& m) {
  const Eigen::Index s = space.stride(mode);
  const int top = space.dim(mode) - 1;
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
    const int n = space.occupation(i, mode);
    if (n < top) out.row(i) = std::sqrt(double(n + 1)) * m.row(i + s);
  }
  return out;
}

CMatrix apply_raising(const FockSpace& space, std::size_t mode,
                      const CMatrix& m) {
  const Eigen::Index s = space.stride(mode);
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
    const int n = space.occupation(i, mode);
    if (n > 0) out.row(i) = std::sqrt(double(n)) * m.row(i - s);
  }
  return out;
}

LadderMoments ladder_moments(const QuantumState& state,
                             std::span<const std::size_t> modes) {
  const FockSpace& space = state.space();
  const std::size_t n = modes.size();
  for (auto k : modes) {
    if (k >= space.num_modes()) {
      throw InvalidArgument("ladder_moments: mode index out of range");
    }
  }
  LadderMoments out;
  out.mean.resize(n);
  out.aa.assign(n, std::vector<Complex>(n));
  out.ad.assign(n, std::vector<Complex>(n));

  if (state.is_pure()) {
    const CMatrix psi = state.amplitudes();
    std::vector<CMatrix> low(n), up(n);
    for (std::size_t j = 0; j < n; ++j) {
      low[j] = apply_lowering(space, modes[j], psi);
      up[j] = apply_raising(space, modes[j], psi);
    }
    for (std::size_t j = 0; j < n; ++j) {
      out.mean[j] = psi.col(0).dot(low[j].col(0));
      for (std::size_t k = 0; k < n; ++k) {
        // <a_j a_k> = (a_j^dag psi)^dag (a_k psi)
        out.aa[j][k] = up[j].col(0).dot(low[k].col(0));
        out.ad[j][k] = low[j].col(0).dot(low[k].col(0));
      }
    }
    return out;
  }

  const CMatrix& rho = state.density();
  for (std::size_t k = 0; k < n; ++k) {
    const CMatrix ak_rho = apply_lowering(space, modes[k], rho);
    out.mean[k] = ak_rho.trace();
    for (std::size_t j = 0; j < n; ++j) {
      out.aa[j][k] = trace_lowering(space, modes[j], ak_rho);
      out.ad[j][k] = trace_raising(space, modes[j], ak_rho);
    }
  }
  return out;
}

}  // namespace cavem::fock
