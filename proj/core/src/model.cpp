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

#include "cavem/model.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cavem/error.hpp"

namespace cavem::model {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << what << " must be positive (got " << x << ")";
    throw InvalidArgument(msg.str());
  }
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << what << " must be >= 0 (got " << x << ")";
    throw InvalidArgument(msg.str());
  }
}

void require_elliptic(double theta1, double theta2) {
  require_positive(theta1, "theta1");
  require_positive(theta2, "theta2");
  if (!(theta2 > theta1)) {
    std::ostringstream msg;
    msg << "theta2 (" << theta2 << ") must exceed theta1 (" << theta1
        << ") for a real Bogoliubov frequency";
    throw InvalidArgument(msg.str());
  }
}

SystemSpec three_mode(double theta1, double theta2, CouplingKind k1,
                      CouplingKind k2, double s1, double s2) {
  require_positive(theta1, "theta1");
  require_positive(theta2, "theta2");
  SystemSpec spec;
  spec.modes = {{"c1", ModeRole::kCavity},
                {"c2", ModeRole::kCavity},
                {"m", ModeRole::kMechanical}};
  spec.couplings = {{"c1", "m", k1, s1, 0.0}, {"c2", "m", k2, s2, 0.0}};
  return spec;
}

CollectiveChannel bogoliubov_channel(std::string name, std::string lowered,
                                     std::string raised, double theta1,
                                     double theta2, double rate) {
  const double big = std::sqrt(theta2 * theta2 - theta1 * theta1);
  CollectiveChannel ch;
  ch.name = std::move(name);
  ch.terms = {{std::move(lowered), {theta2 / big, 0.0}, {0.0, 0.0}},
              {std::move(raised), {0.0, 0.0}, {theta1 / big, 0.0}}};
  ch.rate = rate;
  return ch;
}

}  // namespace

std::vector<std::string> SystemSpec::labels() const {
  std::vector<std::string> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(m.label);
  return out;
}

std::size_t SystemSpec::mode_index(const std::string& label) const {
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (modes[k].label == label) return k;
  }
  throw InvalidArgument("SystemSpec: unresolved mode label '" + label + "'");
}

void SystemSpec::validate() const {
  if (modes.empty()) throw InvalidArgument("SystemSpec: no modes");
  std::set<std::string> seen;
  for (const auto& m : modes) {
    if (!seen.insert(m.label).second) {
      throw InvalidArgument("SystemSpec: duplicate mode '" + m.label + "'");
    }
  }
  for (const auto& c : couplings) {
    mode_index(c.mode_i);
    mode_index(c.mode_j);
    if (c.mode_i == c.mode_j) {
      throw InvalidArgument("SystemSpec: coupling of '" + c.mode_i +
                            "' with itself");
    }
    if (!std::isfinite(c.strength) || !std::isfinite(c.phase)) {
      throw InvalidArgument("SystemSpec: non-finite coupling strength");
    }
  }
  for (const auto& ch : channels) {
    if (const auto* local = std::get_if<LocalChannel>(&ch)) {
      mode_index(local->mode);
      require_nonnegative(local->down_rate, "down_rate");
      require_nonnegative(local->up_rate, "up_rate");
    } else {
      const auto& col = std::get<CollectiveChannel>(ch);
      require_nonnegative(col.rate, "collective rate");
      bool any = false;
      for (const auto& t : col.terms) {
        mode_index(t.mode);
        any = any || std::abs(t.lower) > 0.0 || std::abs(t.raise) > 0.0;
      }
      if (!any) {
        throw InvalidArgument("SystemSpec: collective channel '" + col.name +
                              "' has no nonzero coefficient");
      }
    }
  }
}

SystemSpec scheme_a(double theta1, double theta2) {
  return three_mode(theta1, theta2, CouplingKind::kTwoModeSqueeze,
                    CouplingKind::kBeamSplitter, theta1, theta2);
}

SystemSpec scheme_a_prime(double theta1, double theta2) {
  return three_mode(theta1, theta2, CouplingKind::kBeamSplitter,
                    CouplingKind::kTwoModeSqueeze, theta2, theta1);
}

SystemSpec with_dissipation(SystemSpec spec, double kappa1, double kappa2,
                            double gamma_m, double n_th) {
  require_nonnegative(kappa1, "kappa1");
  require_nonnegative(kappa2, "kappa2");
  require_nonnegative(gamma_m, "gamma_m");
  require_nonnegative(n_th, "n_th");
  int cavity = 0;
  for (const auto& m : spec.modes) {
    if (m.role == ModeRole::kCavity) {
      if (cavity > 1) {
        throw InvalidArgument("with_dissipation: more than two cavities");
      }
      spec.channels.emplace_back(
          LocalChannel{m.label, cavity == 0 ? kappa1 : kappa2, 0.0});
      ++cavity;
    } else {
      spec.channels.emplace_back(
          LocalChannel{m.label, gamma_m * (n_th + 1.0), gamma_m * n_th});
    }
  }
  return spec;
}

double engineered_rate(double theta1, double theta2, double gamma_m) {
  require_positive(gamma_m, "gamma_m");
  return 4.0 * (theta2 * theta2 - theta1 * theta1) / gamma_m;
}

SystemSpec effective_cooling(double theta1, double theta2, double gamma_m,
                             bool include_dtilde) {
  require_elliptic(theta1, theta2);
  const double rate = engineered_rate(theta1, theta2, gamma_m);
  SystemSpec spec;
  spec.modes = {{"c1", ModeRole::kCavity}, {"c2", ModeRole::kCavity}};
  spec.channels.emplace_back(
      bogoliubov_channel("D", "c2", "c1", theta1, theta2, rate));
  if (include_dtilde) {
    spec.channels.emplace_back(
        bogoliubov_channel("D~", "c1", "c2", theta1, theta2, rate));
  }
  return spec;
}

SystemSpec two_mr_system(double theta1, double theta2, double gamma_m1,
                         double gamma_m2, double n_th, double kappa1,
                         double kappa2) {
  require_elliptic(theta1, theta2);
  require_nonnegative(gamma_m1, "gamma_m1");
  require_nonnegative(gamma_m2, "gamma_m2");
  require_nonnegative(n_th, "n_th");
  require_nonnegative(kappa1, "kappa1");
  require_nonnegative(kappa2, "kappa2");
  using CK = CouplingKind;
  SystemSpec spec;
  spec.modes = {{"c1", ModeRole::kCavity},
                {"c2", ModeRole::kCavity},
                {"m1", ModeRole::kMechanical},
                {"m2", ModeRole::kMechanical}};
  spec.couplings = {{"c1", "m1", CK::kTwoModeSqueeze, theta1, 0.0},
                    {"c2", "m1", CK::kBeamSplitter, theta2, 0.0},
                    {"c1", "m2", CK::kBeamSplitter, theta2, 0.0},
                    {"c2", "m2", CK::kTwoModeSqueeze, theta1, 0.0}};
  spec.channels = {LocalChannel{"c1", kappa1, 0.0},
                   LocalChannel{"c2", kappa2, 0.0},
                   LocalChannel{"m1", gamma_m1 * (n_th + 1.0), gamma_m1 * n_th},
                   LocalChannel{"m2", gamma_m2 * (n_th + 1.0), gamma_m2 * n_th}};
  return spec;
}

CompiledSystem compile(const SystemSpec& spec, const fock::FockSpace& space) {
  spec.validate();
  for (const auto& m : spec.modes) {
    if (!space.has_mode(m.label)) {
      throw InvalidArgument("compile: space has no mode '" + m.label + "'");
    }
  }
  fock::Operator h = fock::zero_operator(space);
  for (const auto& c : spec.couplings) {
    const fock::Operator ai_dag = fock::creation(space, c.mode_i);
    const fock::Operator aj = c.kind == CouplingKind::kBeamSplitter
                                  ? fock::annihilation(space, c.mode_j)
                                  : fock::creation(space, c.mode_j);
    const fock::Operator pair = std::polar(1.0, c.phase) * (ai_dag * aj);
    h -= c.strength * (pair + pair.adjoint());
  }

  std::vector<Jump> jumps;
  for (const auto& ch : spec.channels) {
    if (const auto* local = std::get_if<LocalChannel>(&ch)) {
      const std::size_t k = space.mode_index(local->mode);
      if (local->down_rate > 0.0) {
        jumps.push_back({fock::annihilation(space, local->mode),
                         local->down_rate, k});
      }
      if (local->up_rate > 0.0) {
        jumps.push_back({fock::creation(space, local->mode), local->up_rate, k});
      }
      continue;
    }
    const auto& col = std::get<CollectiveChannel>(ch);
    if (!(col.rate > 0.0)) continue;
    fock::Operator l = fock::zero_operator(space);
    for (const auto& t : col.terms) {
      if (t.lower != Complex{}) l += t.lower * fock::annihilation(space, t.mode);
      if (t.raise != Complex{}) l += t.raise * fock::creation(space, t.mode);
    }
    jumps.push_back({std::move(l), col.rate, std::nullopt});
  }
  return {std::move(h), std::move(jumps)};
}

}  // namespace cavem::model
