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
#include <span>
#include <string>
#include <vector>

#include "cavem/fock.hpp"
#include "cavem/model.hpp"

namespace cavem::lindblad {

enum class Method {
  kRk4,  // fixed-step RK4 on the density matrix
  /// Exponential time-differencing RK4: the stiffest single-mode
  /// dissipator is integrated exactly, the step is set by the rest.
  kEtdRk4,
  kExponential,  // dense superoperator exponential, total_dim <= 32
};

struct SolverOptions {
  Method method = Method::kRk4;
  /// Fixed RK4 step. Unset: 1 / omega_max with
  /// omega_max = 2 |H| + sum_k rate_k |L_k|^2 (for kEtdRk4 the sum skips the
  /// split mode).
  std::optional<double> step;
  /// Smallest eigenvalue is computed on every n-th sample (0 disables).
  int sample_stride = 1;
  double trace_tolerance = 1e-7;
  /// steady_state: trace-norm increment per unit rate_scale time.
  double steady_tolerance = 1e-8;
  /// steady_state gives up after horizon / rate_scale.
  double horizon = 50.0;
  /// Rate defining the time unit for steady_state; <= 0 picks the smallest
  /// positive jump rate.
  double rate_scale = 0.0;
  int steady_stride = 32;
  /// Engineered rate used for the stroboscopic validity warning.
  std::optional<double> effective_rate;
};

struct SampleDiagnostics {
  double trace_drift = 0.0;
  double min_eigenvalue = 0.0;  // NaN when not sampled
  double top_level_population = 0.0;
  double step = 0.0;
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<fock::QuantumState> states;
  std::vector<SampleDiagnostics> diagnostics;
  std::vector<std::string> warnings;
};

/// drho/dt = -i[H, rho] + sum_k (rate_k / 2)(2 L rho L^dag - L^dag L rho
/// - rho L^dag L), sampled at `t_grid` (strictly increasing, t_grid[0] >= 0).
EvolutionResult evolve(const fock::Operator& hamiltonian,
                       std::span<const model::Jump> jumps,
                       const fock::QuantumState& rho0,
                       std::span<const double> t_grid,
                       const SolverOptions& opts = {});
EvolutionResult evolve(const model::CompiledSystem& system,
                       const fock::QuantumState& rho0,
                       std::span<const double> t_grid,
                       const SolverOptions& opts = {});

struct SteadyStateResult {
  fock::QuantumState state;
  double time = 0.0;       // integration time needed
  double increment = 0.0;  // last normalized increment
};

/// Integrates until the trace-norm increment per unit of rate_scale time
/// falls below steady_tolerance. Throws NumericalError past the horizon.
SteadyStateResult steady_state(const fock::Operator& hamiltonian,
                               std::span<const model::Jump> jumps,
                               const fock::QuantumState& rho0,
                               const SolverOptions& opts = {});

/// Alternates (H_A, jumps) and (H_B, jumps) for delta_t each, n_cycles times.
/// One sample at the end of every cycle.
EvolutionResult stroboscopic_evolve(const fock::Operator& h_a,
                                    const fock::Operator& h_b,
                                    std::span<const model::Jump> jumps,
                                    double delta_t, int n_cycles,
                                    const fock::QuantumState& rho0,
                                    const SolverOptions& opts = {});

struct AdiabaticReport {
  double max_trace_distance = 0.0;
  double time_of_max = 0.0;
  double engineered_rate = 0.0;
  std::vector<double> times;
  std::vector<double> distances;
};

/// Full three-mode system with a damped mechanical mode against the
/// effective single-channel cooling of the two cavities, both from vacuum.
/// Requires gamma_m >= 10 max(theta1, theta2). dims = {c1, c2, m}.
/// Without options both systems use kEtdRk4 at the default step.
AdiabaticReport adiabatic_equivalence_check(double theta1, double theta2,
                                            double gamma_m,
                                            std::span<const double> t_grid,
                                            std::span<const int> dims);
AdiabaticReport adiabatic_equivalence_check(double theta1, double theta2,
                                            double gamma_m,
                                            std::span<const double> t_grid,
                                            std::span<const int> dims,
                                            const SolverOptions& opts);

}  // namespace cavem::lindblad
