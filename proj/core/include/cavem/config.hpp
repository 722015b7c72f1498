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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cavem/device.hpp"

namespace cavem::config {

struct Entry {
  std::string value;
  int line = 0;
};

/// Flat sectioned key-value text:
///   [section]
///   key = value   # comment
class IniDocument {
 public:
  /// Throws ConfigError with "<source>:<line>: ..." on malformed input.
  static IniDocument parse(std::string_view text, std::string source = "<input>");
  static IniDocument load(const std::string& path);

  const std::string& source() const { return source_; }
  bool has(const std::string& section, const std::string& key) const;
  const Entry& at(const std::string& section, const std::string& key) const;
  std::vector<std::string> sections() const;
  std::vector<std::string> keys(const std::string& section) const;

  /// Replaces or inserts a value; `path` is "section.key".
  void set(const std::string& path, std::string value);

  /// Throws ConfigError naming the first key not in `allowed`.
  void require_known(const std::map<std::string, std::vector<std::string>>& allowed) const;

  /// "<source>:<line>: message" for an existing key.
  std::string where(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  int get_int(const std::string& section, const std::string& key,
              int fallback) const;
  bool get_bool(const std::string& section, const std::string& key,
                bool fallback) const;
  std::vector<double> get_doubles(const std::string& section,
                                  const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& section,
                                       const std::string& key) const;

 private:
  std::string source_;
  std::map<std::string, std::map<std::string, Entry>> data_;
  std::vector<std::string> order_;
};

enum class Dimension {
  kAngularFrequency,  // Hz family (times 2 pi) or rad/s
  kCapacitance,
  kLength,
  kMass,
  kVoltage,
  kTemperature,
};

/// Parses "<number> <unit>" into SI; the unit is mandatory.
double parse_quantity(std::string_view text, Dimension dim);

/// Plain number, no unit.
double parse_number(std::string_view text);

/// Reads the [device] section.
device::DeviceParams load_device(const IniDocument& doc);
double device_threshold(const IniDocument& doc);

}  // namespace cavem::config
