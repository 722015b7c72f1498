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

#include "cavem/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <unsupported/Eigen/MatrixFunctions>

#include "cavem/error.hpp"

namespace cavem::lindblad {

namespace {

using fock::FockSpace;
using fock::Operator;
using fock::QuantumState;
using SparseC = Eigen::SparseMatrix<Complex>;

constexpr Eigen::Index kMaxExponentialDim = 32;
constexpr double kHermitianTol = 1e-10;
constexpr Complex kI{0.0, 1.0};

double inf_norm(const CMatrix& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double one_norm(const CMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

double trace_norm(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double min_eigenvalue(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double top_level_population(const FockSpace& space, const CMatrix& rho) {
  double worst = 0.0;
  for (std::size_t k = 0; k < space.num_modes(); ++k) {
    const int top = space.dim(k) - 1;
    double p = 0.0;
    for (Eigen::Index i = 0; i < space.total_dim(); ++i) {
      if (space.occupation(i, k) == top) p += rho(i, i).real();
    }
    worst = std::max(worst, p);
  }
  return worst;
}

// Dissipator of the single-mode jumps on one mode, as a dk^2 x dk^2
// generator on column-major vec of the mode's operator block.
struct LocalDissipator {
  std::size_t mode = 0;
  CMatrix generator;
  std::vector<Eigen::Index> bases;  // indices with zero occupation of `mode`
};

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Lindblad generator. With `split`, jumps acting on a single mode are kept
// apart so that they can be exponentiated exactly.
class Generator {
 public:
  Generator(const Operator& h, std::span<const model::Jump> jumps, bool split)
      : space_(h.space()) {
    if (!h.is_hermitian(kHermitianTol * std::max(1.0, inf_norm(h.matrix())))) {
      throw InvalidArgument("lindblad: Hamiltonian is not Hermitian");
    }
    CMatrix heff = h.matrix();
    omega_max_ = 2.0 * inf_norm(h.matrix());
    // The stiffest single-mode dissipator becomes the linear part.
    std::optional<std::size_t> split_mode;
    if (split) {
      std::vector<double> weight(space_.num_modes(), 0.0);
      for (const auto& j : jumps) {
        if (j.mode && j.rate > 0.0) {
          weight[*j.mode] += j.rate * one_norm(j.op.matrix()) * inf_norm(j.op.matrix());
        }
      }
      const auto it = std::max_element(weight.begin(), weight.end());
      if (it != weight.end() && *it > 0.0) {
        split_mode = static_cast<std::size_t>(it - weight.begin());
      }
    }
    for (const auto& j : jumps) {
      if (!(j.op.space() == space_)) {
        throw InvalidArgument("lindblad: jump operator lives on another space");
      }
      if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) {
        throw InvalidArgument("lindblad: jump rate must be >= 0");
      }
      if (j.rate == 0.0) continue;
      all_rates_.push_back(j.rate);
      const CMatrix& l = j.op.matrix();
      if (split_mode && j.mode == split_mode) {
        add_local(*j.mode, l, j.rate);
        continue;
      }
      heff -= (0.5 * j.rate) * kI * (l.adjoint() * l);
      omega_max_ += j.rate * one_norm(l) * inf_norm(l);
      jumps_.push_back(l.sparseView());
      rates_.push_back(j.rate);
    }
    heff_ = heff.sparseView();
    heff_.makeCompressed();
  }

  const FockSpace& space() const { return space_; }
  double omega_max() const { return omega_max_; }
  bool has_dissipation() const { return !all_rates_.empty(); }
  double min_rate() const {
    return all_rates_.empty()
               ? 0.0
               : *std::min_element(all_rates_.begin(), all_rates_.end());
  }
  const std::vector<LocalDissipator>& locals() const { return locals_; }

  void rhs(const CMatrix& rho, CMatrix& out, CMatrix& x, CMatrix& y) const {
    x.noalias() = heff_ * rho;
    out = -kI * x;
    out += kI * x.adjoint();
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
      y.noalias() = jumps_[k] * rho;
      x.noalias() = jumps_[k] * y.adjoint();
      out += rates_[k] * x;
    }
  }

  CMatrix superoperator() const {
    if (!locals_.empty()) {
      throw InvalidArgument("lindblad: superoperator needs an unsplit generator");
    }
    const Eigen::Index d = space_.total_dim();
    const CMatrix id = CMatrix::Identity(d, d);
    const CMatrix heff = heff_;
    CMatrix s = -kI * kron(id, heff) + kI * kron(heff.conjugate(), id);
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
      const CMatrix l = jumps_[k];
      s += rates_[k] * kron(l.conjugate(), l);
    }
    return s;
  }

 private:
  void add_local(std::size_t mode, const CMatrix& full, double rate) {
    const int dk = space_.dim(mode);
    const Eigen::Index st = space_.stride(mode);
    CMatrix l(dk, dk);
    for (int a = 0; a < dk; ++a) {
      for (int b = 0; b < dk; ++b) l(a, b) = full(a * st, b * st);
    }
    auto it = std::find_if(locals_.begin(), locals_.end(),
                           [&](const LocalDissipator& ld) { return ld.mode == mode; });
    if (it == locals_.end()) {
      LocalDissipator ld;
      ld.mode = mode;
      ld.generator = CMatrix::Zero(dk * dk, dk * dk);
      for (Eigen::Index i = 0; i < space_.total_dim(); ++i) {
        if (space_.occupation(i, mode) == 0) ld.bases.push_back(i);
      }
      locals_.push_back(std::move(ld));
      it = std::prev(locals_.end());
    }
    const CMatrix id = CMatrix::Identity(dk, dk);
    const CMatrix ldl = l.adjoint() * l;
    it->generator += rate * (kron(l.conjugate(), l) - 0.5 * kron(id, ldl) -
                             0.5 * kron(ldl.transpose(), id));
  }

  FockSpace space_;
  SparseC heff_;
  std::vector<SparseC> jumps_;
  std::vector<double> rates_;
  std::vector<double> all_rates_;
  std::vector<LocalDissipator> locals_;
  double omega_max_ = 0.0;
};

// Advances rho in place; one instance per generator.
class Stepper {
 public:
  Stepper(const Generator& gen, const SolverOptions& opts)
      : gen_(gen), opts_(opts) {
    const Eigen::Index d = gen.space().total_dim();
    if (opts.method == Method::kExponential) {
      if (d > kMaxExponentialDim) {
        std::ostringstream msg;
        msg << "lindblad: exponential method limited to total_dim <= "
            << kMaxExponentialDim << " (got " << d << ")";
        throw InvalidArgument(msg.str());
      }
      super_ = gen.superoperator();
    }
    if (opts.step) {
      if (!(*opts.step > 0.0) || !std::isfinite(*opts.step)) {
        throw InvalidArgument("lindblad: step must be positive");
      }
      h_max_ = *opts.step;
    } else {
      h_max_ = 1.0 / std::max(gen.omega_max(), 1e-12);
    }
    for (auto* m : {&k1_, &k2_, &k3_, &k4_, &tmp_, &x_, &y_, &a_, &b_, &c_, &d_}) {
      m->resize(d, d);
    }
  }

  double h_max() const { return h_max_; }

  /// Returns the step used.
  double advance(CMatrix& rho, double duration) {
    if (duration <= 0.0) return 0.0;
    if (opts_.method == Method::kExponential) {
      advance_exponential(rho, duration);
      return duration;
    }
    const auto n = static_cast<long>(
        std::max(1.0, std::ceil(duration / h_max_ - 1e-9)));
    const double h = duration / static_cast<double>(n);
    if (gen_.locals().empty()) {
      for (long i = 0; i < n; ++i) rk4_step(rho, h);
    } else {
      const auto& m = etd_maps(h);
      for (long i = 0; i < n; ++i) etd_step(rho, m);
    }
    return h;
  }

 private:
  void hermitize(CMatrix& rho) {
    tmp_ = rho.adjoint();
    rho += tmp_;
    rho *= 0.5;
  }

  void rk4_step(CMatrix& rho, double h) {
    gen_.rhs(rho, k1_, x_, y_);
    tmp_ = rho + (0.5 * h) * k1_;
    gen_.rhs(tmp_, k2_, x_, y_);
    tmp_ = rho + (0.5 * h) * k2_;
    gen_.rhs(tmp_, k3_, x_, y_);
    tmp_ = rho + h * k3_;
    gen_.rhs(tmp_, k4_, x_, y_);
    rho += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    hermitize(rho);
  }

  // exp(Lh/2), h/2 phi1(Lh/2), exp(Lh) and the ETDRK4 weights, for the
  // single split mode.
  struct EtdMaps {
    CMatrix e_half, p_half, e_full, w1, w23, w4;
  };

  const EtdMaps& etd_maps(double h) {
    auto it = etd_cache_.find(h);
    if (it != etd_cache_.end()) return it->second;
    const CMatrix& gen = gen_.locals().front().generator;
    const Eigen::Index n = gen.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    CMatrix aug2 = CMatrix::Zero(2 * n, 2 * n);
    aug2.topLeftCorner(n, n) = gen * (0.5 * h);
    aug2.topRightCorner(n, n) = id;
    const CMatrix ex2 = aug2.exp();
    CMatrix aug4 = CMatrix::Zero(4 * n, 4 * n);
    aug4.block(0, 0, n, n) = gen * h;
    aug4.block(0, n, n, n) = id;
    aug4.block(n, 2 * n, n, n) = id;
    aug4.block(2 * n, 3 * n, n, n) = id;
    const CMatrix ex4 = aug4.exp();
    const CMatrix phi1 = ex4.block(0, n, n, n);
    const CMatrix phi2 = ex4.block(0, 2 * n, n, n);
    const CMatrix phi3 = ex4.block(0, 3 * n, n, n);
    EtdMaps m;
    m.e_half = ex2.topLeftCorner(n, n);
    m.p_half = (0.5 * h) * ex2.topRightCorner(n, n);
    m.e_full = ex4.block(0, 0, n, n);
    m.w1 = h * (phi1 - 3.0 * phi2 + 4.0 * phi3);
    m.w23 = h * (2.0 * phi2 - 4.0 * phi3);
    m.w4 = h * (4.0 * phi3 - phi2);
    return etd_cache_.emplace(h, std::move(m)).first->second;
  }

  // out = (map acting on the split mode) in
  void apply_local(const CMatrix& map, const CMatrix& in, CMatrix& out) {
    const auto& ld = gen_.locals().front();
    const Eigen::Index st = gen_.space().stride(ld.mode);
    const int dk = gen_.space().dim(ld.mode);
    vin_.resize(dk * dk);
    vout_.resize(dk * dk);
    for (Eigen::Index j0 : ld.bases) {
      for (Eigen::Index i0 : ld.bases) {
        for (int b = 0; b < dk; ++b) {
          for (int a = 0; a < dk; ++a) vin_(a + b * dk) = in(i0 + a * st, j0 + b * st);
        }
        vout_.noalias() = map * vin_;
        for (int b = 0; b < dk; ++b) {
          for (int a = 0; a < dk; ++a) out(i0 + a * st, j0 + b * st) = vout_(a + b * dk);
        }
      }
    }
  }

  // Cox-Matthews ETDRK4 with the split dissipator as the linear part.
  void etd_step(CMatrix& rho, const EtdMaps& m) {
    gen_.rhs(rho, k1_, x_, y_);               // N(u)
    apply_local(m.e_half, rho, a_);           // e u
    apply_local(m.p_half, k1_, tmp_);
    b_ = a_ + tmp_;                           // a
    gen_.rhs(b_, k2_, x_, y_);                // N(a)
    apply_local(m.p_half, k2_, tmp_);
    c_ = a_ + tmp_;                           // b
    gen_.rhs(c_, k3_, x_, y_);                // N(b)
    apply_local(m.e_half, b_, a_);            // e a
    d_ = 2.0 * k3_ - k1_;
    apply_local(m.p_half, d_, tmp_);
    c_ = a_ + tmp_;                           // c
    gen_.rhs(c_, k4_, x_, y_);                // N(c)
    apply_local(m.e_full, rho, a_);
    apply_local(m.w1, k1_, tmp_);
    a_ += tmp_;
    d_ = k2_ + k3_;
    apply_local(m.w23, d_, tmp_);
    a_ += tmp_;
    apply_local(m.w4, k4_, tmp_);
    rho = a_ + tmp_;
    hermitize(rho);
  }

  void advance_exponential(CMatrix& rho, double duration) {
    // Grids are usually uniform, so a handful of propagators suffice.
    auto it = cache_.find(duration);
    if (it == cache_.end()) {
      it = cache_.emplace(duration, CMatrix((super_ * duration).exp())).first;
    }
    const Eigen::Index d = rho.rows();
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    Eigen::VectorXcd w = it->second * v;
    rho = Eigen::Map<const CMatrix>(w.data(), d, d);
    hermitize(rho);
  }

  const Generator& gen_;
  const SolverOptions& opts_;
  double h_max_ = 0.0;
  CMatrix super_;
  std::map<double, CMatrix> cache_;
  std::map<double, EtdMaps> etd_cache_;
  CMatrix k1_, k2_, k3_, k4_, tmp_, x_, y_, a_, b_, c_, d_;
  Eigen::VectorXcd vin_, vout_;
};

bool split_locals(const SolverOptions& opts) {
  return opts.method == Method::kEtdRk4;
}

void check_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw InvalidArgument("evolve: empty t_grid");
  if (!(t_grid[0] >= 0.0)) throw InvalidArgument("evolve: t_grid must start at or after 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw InvalidArgument("evolve: t_grid must be strictly increasing");
    }
  }
}

class Recorder {
 public:
  Recorder(const FockSpace& space, const SolverOptions& opts,
           EvolutionResult& out)
      : space_(space), opts_(opts), out_(out) {}

  void record(double t, const CMatrix& rho, double step) {
    const double tr = rho.trace().real();
    const double drift = std::abs(tr - 1.0);
    if (!(drift <= opts_.trace_tolerance)) {
      std::ostringstream msg;
      msg << "lindblad: trace drift " << drift << " at t=" << t
          << " exceeds tolerance " << opts_.trace_tolerance
          << "; use a smaller step";
      throw NumericalError(msg.str());
    }
    SampleDiagnostics diag;
    diag.trace_drift = drift;
    diag.step = step;
    diag.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    if (opts_.sample_stride > 0 && count_ % opts_.sample_stride == 0) {
      diag.min_eigenvalue = min_eigenvalue(rho);
    }
    diag.top_level_population = top_level_population(space_, rho);
    if (diag.top_level_population > 1e-4 && !tail_warned_) {
      std::ostringstream msg;
      msg << "top Fock level population " << diag.top_level_population
          << " at t=" << t << " exceeds 1e-4; increase the truncation";
      out_.warnings.push_back(msg.str());
      tail_warned_ = true;
    }
    ++count_;
    out_.times.push_back(t);
    out_.states.push_back(
        QuantumState::mixed(space_, rho / tr, QuantumState::Check::kCheap));
    out_.diagnostics.push_back(diag);
  }

 private:
  const FockSpace& space_;
  const SolverOptions& opts_;
  EvolutionResult& out_;
  int count_ = 0;
  bool tail_warned_ = false;
};

void require_space(const FockSpace& a, const FockSpace& b, const char* where) {
  if (!(a == b)) {
    throw InvalidArgument(std::string(where) +
                          ": operators and state live on different spaces");
  }
}

}  // namespace

EvolutionResult evolve(const Operator& hamiltonian,
                       std::span<const model::Jump> jumps,
                       const QuantumState& rho0, std::span<const double> t_grid,
                       const SolverOptions& opts) {
  require_space(hamiltonian.space(), rho0.space(), "evolve");
  check_grid(t_grid);
  const Generator gen(hamiltonian, jumps, split_locals(opts));
  Stepper stepper(gen, opts);
  EvolutionResult out;
  Recorder rec(rho0.space(), opts, out);
  CMatrix rho = rho0.density_matrix();
  double t = 0.0;
  for (double target : t_grid) {
    const double h = stepper.advance(rho, target - t);
    t = target;
    rec.record(t, rho, h);
  }
  return out;
}

EvolutionResult evolve(const model::CompiledSystem& system,
                       const QuantumState& rho0, std::span<const double> t_grid,
                       const SolverOptions& opts) {
  return evolve(system.hamiltonian, system.jumps, rho0, t_grid, opts);
}

SteadyStateResult steady_state(const Operator& hamiltonian,
                               std::span<const model::Jump> jumps,
                               const QuantumState& rho0,
                               const SolverOptions& opts) {
  require_space(hamiltonian.space(), rho0.space(), "steady_state");
  const Generator gen(hamiltonian, jumps, split_locals(opts));
  if (!gen.has_dissipation()) {
    throw InvalidArgument("steady_state: needs at least one channel with a "
                          "positive rate");
  }
  if (opts.steady_stride <= 0) {
    throw InvalidArgument("steady_state: steady_stride must be positive");
  }
  const double scale = opts.rate_scale > 0.0 ? opts.rate_scale : gen.min_rate();
  Stepper stepper(gen, opts);
  const double chunk = opts.steady_stride * stepper.h_max();
  const double t_max = opts.horizon / scale;
  CMatrix rho = rho0.density_matrix();
  double t = 0.0;
  double increment = std::numeric_limits<double>::infinity();
  while (t < t_max) {
    const CMatrix before = rho;
    stepper.advance(rho, chunk);
    t += chunk;
    const double drift = std::abs(rho.trace().real() - 1.0);
    if (!(drift <= opts.trace_tolerance)) {
      std::ostringstream msg;
      msg << "steady_state: trace drift " << drift << " at t=" << t
          << "; use a smaller step";
      throw NumericalError(msg.str());
    }
    increment = trace_norm(rho - before) / (chunk * scale);
    if (increment < opts.steady_tolerance) {
      const double tr = rho.trace().real();
      return {QuantumState::mixed(rho0.space(), rho / tr), t, increment};
    }
  }
  std::ostringstream msg;
  msg << "steady_state: no convergence within horizon " << opts.horizon
      << " / rate (t=" << t_max << ", last increment " << increment
      << "); the dynamics may have a degenerate steady-state family";
  throw NumericalError(msg.str());
}

EvolutionResult stroboscopic_evolve(const Operator& h_a, const Operator& h_b,
                                    std::span<const model::Jump> jumps,
                                    double delta_t, int n_cycles,
                                    const QuantumState& rho0,
                                    const SolverOptions& opts) {
  require_space(h_a.space(), rho0.space(), "stroboscopic_evolve");
  require_space(h_b.space(), rho0.space(), "stroboscopic_evolve");
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
    throw InvalidArgument("stroboscopic_evolve: delta_t must be positive");
  }
  if (n_cycles < 0) {
    throw InvalidArgument("stroboscopic_evolve: n_cycles must be >= 0");
  }
  const Generator gen_a(h_a, jumps, split_locals(opts));
  const Generator gen_b(h_b, jumps, split_locals(opts));
  // Share one step so both halves are integrated alike.
  SolverOptions shared = opts;
  if (!shared.step) {
    shared.step = 1.0 / std::max({gen_a.omega_max(), gen_b.omega_max(), 1e-12});
  }
  Stepper step_a(gen_a, shared);
  Stepper step_b(gen_b, shared);
  EvolutionResult out;
  if (opts.effective_rate && delta_t * *opts.effective_rate > 0.1) {
    std::ostringstream msg;
    msg << "delta_t * rate = " << delta_t * *opts.effective_rate
        << " > 0.1; the alternation may not follow the effective dynamics";
    out.warnings.push_back(msg.str());
  }
  Recorder rec(rho0.space(), opts, out);
  CMatrix rho = rho0.density_matrix();
  for (int c = 0; c < n_cycles; ++c) {
    step_a.advance(rho, delta_t);
    const double h = step_b.advance(rho, delta_t);
    rec.record(2.0 * delta_t * (c + 1), rho, h);
  }
  return out;
}

AdiabaticReport adiabatic_equivalence_check(double theta1, double theta2,
                                            double gamma_m,
                                            std::span<const double> t_grid,
                                            std::span<const int> dims) {
  SolverOptions opts;
  opts.method = Method::kEtdRk4;
  return adiabatic_equivalence_check(theta1, theta2, gamma_m, t_grid, dims, opts);
}

AdiabaticReport adiabatic_equivalence_check(double theta1, double theta2,
                                            double gamma_m,
                                            std::span<const double> t_grid,
                                            std::span<const int> dims,
                                            const SolverOptions& opts) {
  if (!std::isfinite(theta1) || !std::isfinite(theta2) || !(theta1 >= 0.0) ||
      !(theta2 > theta1)) {
    throw InvalidArgument("adiabatic_equivalence_check: requires theta2 > "
                          "theta1 >= 0");
  }
  if (!(gamma_m >= 10.0 * theta2)) {
    std::ostringstream msg;
    msg << "adiabatic_equivalence_check: gamma_m / max(theta) = "
        << gamma_m / theta2 << " < 10; adiabatic elimination not justified";
    throw InvalidArgument(msg.str());
  }
  if (dims.size() != 3) {
    throw InvalidArgument("adiabatic_equivalence_check: dims must be {c1, c2, m}");
  }
  using model::CouplingKind;
  const double big = std::sqrt(theta2 * theta2 - theta1 * theta1);
  const double rate = 4.0 * big * big / gamma_m;

  // Built directly: the public builders reject theta1 = 0.
  model::SystemSpec full;
  full.modes = {{"c1", model::ModeRole::kCavity},
                {"c2", model::ModeRole::kCavity},
                {"m", model::ModeRole::kMechanical}};
  if (theta1 > 0.0) {
    full.couplings.push_back({"c1", "m", CouplingKind::kTwoModeSqueeze, theta1, 0.0});
  }
  full.couplings.push_back({"c2", "m", CouplingKind::kBeamSplitter, theta2, 0.0});
  full.channels.emplace_back(model::LocalChannel{"m", gamma_m, 0.0});

  model::SystemSpec eff;
  eff.modes = {full.modes[0], full.modes[1]};
  model::CollectiveChannel d{"D", {}, rate};
  d.terms.push_back({"c2", {theta2 / big, 0.0}, {0.0, 0.0}});
  if (theta1 > 0.0) d.terms.push_back({"c1", {0.0, 0.0}, {theta1 / big, 0.0}});
  eff.channels.emplace_back(d);

  const FockSpace full_space({dims[0], dims[1], dims[2]}, {"c1", "c2", "m"});
  const FockSpace eff_space({dims[0], dims[1]}, {"c1", "c2"});
  const auto full_sys = model::compile(full, full_space);
  const auto eff_sys = model::compile(eff, eff_space);
  const auto r_full = evolve(full_sys, fock::vacuum(full_space), t_grid, opts);
  const auto r_eff = evolve(eff_sys, fock::vacuum(eff_space), t_grid, opts);

  AdiabaticReport report;
  report.engineered_rate = rate;
  const std::vector<std::string> keep = {"c1", "c2"};
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const auto reduced = fock::partial_trace(r_full.states[i], keep);
    const double dist = fock::trace_distance(reduced, r_eff.states[i]);
    report.times.push_back(t_grid[i]);
    report.distances.push_back(dist);
    if (dist > report.max_trace_distance) {
      report.max_trace_distance = dist;
      report.time_of_max = t_grid[i];
    }
  }
  return report;
}

}  // namespace cavem::lindblad
