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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace cavem {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

}  // namespace cavem

/// Truncated multimode Fock space with dense operators and states.
///
/// Basis ordering is row-major over modes: the last listed mode varies
/// fastest, so for dims {d0, d1} the basis index of |n0, n1> is n0*d1 + n1.
/// Serialized states depend on this ordering.
namespace cavem::fock {

inline constexpr double kDefaultTailTolerance = 1e-6;

class FockSpace {
 public:
  /// Throws InvalidArgument if dims is empty, a dim is below 2, or labels
  /// are duplicated or of the wrong count.
  FockSpace(std::vector<int> dims, std::vector<std::string> labels);

  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_modes() const { return dims_.size(); }
  Eigen::Index total_dim() const { return total_dim_; }

  bool has_mode(std::string_view label) const;
  /// Throws InvalidArgument for an unknown label.
  std::size_t mode_index(std::string_view label) const;
  int dim(std::size_t mode) const { return dims_[mode]; }
  /// Index distance between |..., n_k, ...> and |..., n_k + 1, ...>.
  Eigen::Index stride(std::size_t mode) const { return strides_[mode]; }
  /// Occupation of `mode` in basis state `index`.
  int occupation(Eigen::Index index, std::size_t mode) const {
    return static_cast<int>((index / strides_[mode]) % dims_[mode]);
  }

  friend bool operator==(const FockSpace& a, const FockSpace& b) {
    return a.dims_ == b.dims_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index total_dim_ = 1;
};

FockSpace make_space(std::vector<int> dims, std::vector<std::string> labels);

class Operator {
 public:
  Operator(FockSpace space, CMatrix matrix);

  const FockSpace& space() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }

  Operator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  FockSpace space_;
  CMatrix matrix_;
};

Operator identity(const FockSpace& space);
Operator zero_operator(const FockSpace& space);
/// Lowering operator of `label`, sqrt(n) on the subdiagonal of the mode
/// factor, embedded with identities on the other modes.
Operator annihilation(const FockSpace& space, std::string_view label);
Operator creation(const FockSpace& space, std::string_view label);
Operator number(const FockSpace& space, std::string_view label);

/// Pure vector or density matrix on a FockSpace.
class QuantumState {
 public:
  enum class Check {
    kFull,   // hermiticity, trace and smallest eigenvalue
    kCheap,  // hermiticity and trace only
  };

  /// Throws InvalidArgument unless the vector has unit norm within 1e-9.
  static QuantumState pure(FockSpace space, CVector amplitudes);
  /// Throws InvalidArgument unless rho is Hermitian and has unit trace
  /// within 1e-9 and (kFull) no eigenvalue below -1e-8.
  static QuantumState mixed(FockSpace space, CMatrix rho,
                            Check check = Check::kFull);

  const FockSpace& space() const { return space_; }
  bool is_pure() const { return std::holds_alternative<CVector>(repr_); }
  /// Throws InvalidArgument if the state is a density matrix.
  const CVector& amplitudes() const;
  /// Throws InvalidArgument if the state is a pure vector.
  const CMatrix& density() const;
  /// The density matrix, built as |psi><psi| for pure states.
  CMatrix density_matrix() const;

 private:
  QuantumState(FockSpace space, std::variant<CVector, CMatrix> repr)
      : space_(std::move(space)), repr_(std::move(repr)) {}

  FockSpace space_;
  std::variant<CVector, CMatrix> repr_;
};

QuantumState vacuum(const FockSpace& space);

/// Product of single-mode geometric distributions with mean occupations
/// `occupations` (one per mode), renormalized after truncation. Throws
/// TruncationError naming the mode whose tail mass (n/(1+n))^dim exceeds
/// `tail_tolerance`.
QuantumState thermal_state(const FockSpace& space,
                           std::span<const double> occupations,
                           double tail_tolerance = kDefaultTailTolerance);

/// sum_n (sign tanh zeta)^n / cosh zeta |n, n> on a two-mode space,
/// renormalized after truncation.
QuantumState tmsv_state(const FockSpace& space, double zeta, int sign,
                        double tail_tolerance = kDefaultTailTolerance);

Complex expectation(const Operator& op, const QuantumState& state);

/// Reduced density matrix on the listed modes, in the order they appear in
/// the parent space.
QuantumState partial_trace(const QuantumState& state,
                           std::span<const std::string> keep);

double trace_distance(const QuantumState& a, const QuantumState& b);

/// a_k applied from the left to every column of `m` without materializing
/// the full operator.
CMatrix apply_lowering(const FockSpace& space, std::size_t mode,
                       const CMatrix& m);
CMatrix apply_raising(const FockSpace& space, std::size_t mode,
                      const CMatrix& m);

/// <a_k> and the normally ordered second moments needed by the Gaussian
/// bridge, computed with O(d^2) ladder actions.
struct LadderMoments {
  std::vector<Complex> mean;             // <a_k>
  std::vector<std::vector<Complex>> aa;  // <a_j a_k>
  std::vector<std::vector<Complex>> ad;  // <a_j^dag a_k>
};
LadderMoments ladder_moments(const QuantumState& state,
                             std::span<const std::size_t> modes);

}  // namespace cavem::fock
