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

#include <string>
#include <string_view>

#include "cavem/fock.hpp"
#include "cavem/gaussian.hpp"
#include "cavem/lindblad.hpp"

namespace cavem::serialize {

/// {"dims", "labels", "kind": "pure"|"mixed", "data": [[re, im], ...]};
/// matrices are row-major.
std::string to_json(const fock::QuantumState& state);
std::string to_json(const fock::Operator& op);
fock::QuantumState state_from_json(std::string_view text);
fock::Operator operator_from_json(std::string_view text);

/// {"mean": [...], "cov": [[...], ...]}
std::string to_json(const gaussian::GaussianState& g);
gaussian::GaussianState gaussian_from_json(std::string_view text);

/// Covariance rows, 12 significant digits.
std::string covariance_csv(const gaussian::GaussianState& g);

/// Times, diagnostics and warnings; states only on request.
std::string to_json(const lindblad::EvolutionResult& result,
                    bool include_states = false);

/// printf("%.12g"), with nan/inf spelled out.
std::string format_number(double x);

}  // namespace cavem::serialize
