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

#include <stdexcept>
#include <string>

namespace cavem {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, unknown label,
/// negative rate, regime violation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The Fock truncation is too small for the requested state.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Numerical integration failed: trace drift, lost symmetry, no steady state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario or device configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cavem
