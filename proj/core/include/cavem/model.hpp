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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cavem/fock.hpp"

/// Declarative quadratic Hamiltonians and linear Lindblad channels.
///
/// Units: hbar = 1, all strengths and rates are angular frequencies. A
/// channel with jump operator L and rate g contributes
/// (g/2)(2 L rho L^dag - L^dag L rho - rho L^dag L).
namespace cavem::model {

enum class ModeRole { kCavity, kMechanical };

struct Mode {
  std::string label;
  ModeRole role = ModeRole::kCavity;
};

enum class CouplingKind {
  kBeamSplitter,    // a_i^dag a_j + h.c.
  kTwoModeSqueeze,  // a_i^dag a_j^dag + h.c.
};

/// Hamiltonian term -strength (e^{i phase} pair + h.c.).
struct QuadraticCoupling {
  std::string mode_i;
  std::string mode_j;
  CouplingKind kind = CouplingKind::kBeamSplitter;
  double strength = 0.0;
  double phase = 0.0;
};

/// Thermal-style damping of one mode: jump a at down_rate, a^dag at up_rate.
struct LocalChannel {
  std::string mode;
  double down_rate = 0.0;
  double up_rate = 0.0;
};

/// One term lower*a + raise*a^dag of a collective jump operator.
struct LadderTerm {
  std::string mode;
  Complex lower{0.0, 0.0};
  Complex raise{0.0, 0.0};
};

/// Delocalized jump operator sum_k (lower_k a_k + raise_k a_k^dag) at a
/// single rate. Coefficients are stored as given (Bogoliubov weights are not
/// renormalized).
struct CollectiveChannel {
  std::string name;
  std::vector<LadderTerm> terms;
  double rate = 0.0;
};

using LindbladChannel = std::variant<LocalChannel, CollectiveChannel>;

struct SystemSpec {
  std::vector<Mode> modes;
  std::vector<QuadraticCoupling> couplings;
  std::vector<LindbladChannel> channels;

  std::vector<std::string> labels() const;
  std::size_t mode_index(const std::string& label) const;
  /// Throws InvalidArgument on unresolved labels, self-couplings,
  /// non-finite strengths, negative rates or empty collective channels.
  void validate() const;
};

/// Scheme A: TwoModeSqueeze(c1, m, theta1) + BeamSplitter(c2, m, theta2).
SystemSpec scheme_a(double theta1, double theta2);

/// Partner Hamiltonian that cools the second Bogoliubov mode
/// (theta2/Theta) a1 + (theta1/Theta) a2^dag: BeamSplitter(c1, m, theta2)
/// + TwoModeSqueeze(c2, m, theta1), i.e. scheme A with the cavities swapped.
SystemSpec scheme_a_prime(double theta1, double theta2);

/// Appends cavity decay (kappa_j, 0) and mechanical damping
/// (gamma_m (n_th + 1), gamma_m n_th) to every declared mode by role.
SystemSpec with_dissipation(SystemSpec spec, double kappa1, double kappa2,
                            double gamma_m, double n_th);

/// Two cavities cooled by the Bogoliubov operator
/// D = (theta2/Theta) a2 + (theta1/Theta) a1^dag at Gamma_c = 4 Theta^2/gamma_m
/// and, if requested, by D~ = (theta2/Theta) a1 + (theta1/Theta) a2^dag.
SystemSpec effective_cooling(double theta1, double theta2, double gamma_m,
                             bool include_dtilde);

/// Two cavities coupled to two damped mechanical resonators, one driving
/// each Bogoliubov mode.
SystemSpec two_mr_system(double theta1, double theta2, double gamma_m1,
                         double gamma_m2, double n_th, double kappa1,
                         double kappa2);

/// Gamma_c = 4 (theta2^2 - theta1^2) / gamma_m.
double engineered_rate(double theta1, double theta2, double gamma_m);

struct Jump {
  fock::Operator op;
  double rate = 0.0;
  /// Set when op acts on this mode only (identity elsewhere).
  std::optional<std::size_t> mode;
};

struct CompiledSystem {
  fock::Operator hamiltonian;
  std::vector<Jump> jumps;
};

/// Concrete Fock operators for `spec`. Zero-rate jumps are dropped.
CompiledSystem compile(const SystemSpec& spec, const fock::FockSpace& space);

}  // namespace cavem::model
