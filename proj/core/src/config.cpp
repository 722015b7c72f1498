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

#include "cavem/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cavem/error.hpp"

namespace cavem::config {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#' && line[i] != ';') continue;
    if (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t') {
      return line.substr(0, i);
    }
  }
  return line;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = trim(text.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

struct Unit {
  std::string_view name;
  Dimension dim;
  double scale;
};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr Unit kUnits[] = {
    {"Hz", Dimension::kAngularFrequency, kTwoPi},
    {"kHz", Dimension::kAngularFrequency, kTwoPi * 1e3},
    {"MHz", Dimension::kAngularFrequency, kTwoPi * 1e6},
    {"GHz", Dimension::kAngularFrequency, kTwoPi * 1e9},
    {"rad/s", Dimension::kAngularFrequency, 1.0},
    {"F", Dimension::kCapacitance, 1.0},
    {"uF", Dimension::kCapacitance, 1e-6},
    {"nF", Dimension::kCapacitance, 1e-9},
    {"pF", Dimension::kCapacitance, 1e-12},
    {"fF", Dimension::kCapacitance, 1e-15},
    {"m", Dimension::kLength, 1.0},
    {"mm", Dimension::kLength, 1e-3},
    {"um", Dimension::kLength, 1e-6},
    {"nm", Dimension::kLength, 1e-9},
    {"kg", Dimension::kMass, 1.0},
    {"g", Dimension::kMass, 1e-3},
    {"mg", Dimension::kMass, 1e-6},
    {"ug", Dimension::kMass, 1e-9},
    {"ng", Dimension::kMass, 1e-12},
    {"pg", Dimension::kMass, 1e-15},
    {"fg", Dimension::kMass, 1e-18},
    {"V", Dimension::kVoltage, 1.0},
    {"mV", Dimension::kVoltage, 1e-3},
    {"uV", Dimension::kVoltage, 1e-6},
    {"K", Dimension::kTemperature, 1.0},
    {"mK", Dimension::kTemperature, 1e-3},
    {"uK", Dimension::kTemperature, 1e-6},
};

const char* dimension_name(Dimension d) {
  switch (d) {
    case Dimension::kAngularFrequency: return "frequency";
    case Dimension::kCapacitance: return "capacitance";
    case Dimension::kLength: return "length";
    case Dimension::kMass: return "mass";
    case Dimension::kVoltage: return "voltage";
    case Dimension::kTemperature: return "temperature";
  }
  return "quantity";
}

}  // namespace

IniDocument IniDocument::parse(std::string_view text, std::string source) {
  IniDocument doc;
  doc.source_ = std::move(source);
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << doc.source_ << ":" << line_no << ": " << what;
    throw ConfigError(msg.str());
  };
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(strip_comment(text.substr(pos, end - pos)));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (!valid_name(name)) fail("invalid section name '" + std::string(name) + "'");
      section = name;
      if (!doc.data_.contains(section)) {
        doc.data_[section];
        doc.order_.push_back(section);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (section.empty()) fail("key '" + std::string(key) + "' outside any section");
    if (!valid_name(key)) fail("invalid key '" + std::string(key) + "'");
    if (value.empty()) fail("empty value for key '" + std::string(key) + "'");
    auto& sec = doc.data_[section];
    if (sec.contains(std::string(key))) {
      fail("duplicate key '" + std::string(key) + "' in [" + section + "]");
    }
    sec[std::string(key)] = {std::string(value), line_no};
  }
  return doc;
}

IniDocument IniDocument::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

bool IniDocument::has(const std::string& section, const std::string& key) const {
  const auto it = data_.find(section);
  return it != data_.end() && it->second.contains(key);
}

const Entry& IniDocument::at(const std::string& section,
                             const std::string& key) const {
  const auto it = data_.find(section);
  if (it == data_.end() || !it->second.contains(key)) {
    throw ConfigError(source_ + ": missing key '" + key + "' in [" + section + "]");
  }
  return it->second.at(key);
}

std::vector<std::string> IniDocument::sections() const { return order_; }

std::vector<std::string> IniDocument::keys(const std::string& section) const {
  std::vector<std::string> out;
  const auto it = data_.find(section);
  if (it == data_.end()) return out;
  for (const auto& [k, v] : it->second) out.push_back(k);
  return out;
}

void IniDocument::set(const std::string& path, std::string value) {
  const auto dot = path.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == path.size()) {
    throw ConfigError("parameter path '" + path + "' must look like section.key");
  }
  const std::string section = path.substr(0, dot);
  const std::string key = path.substr(dot + 1);
  if (!data_.contains(section)) order_.push_back(section);
  auto& entry = data_[section][key];
  entry.value = std::move(value);
}

void IniDocument::require_known(
    const std::map<std::string, std::vector<std::string>>& allowed) const {
  for (const auto& [section, entries] : data_) {
    const auto it = allowed.find(section);
    if (it == allowed.end()) {
      int line = 0;
      for (const auto& [k, e] : entries) {
        if (line == 0 || (e.line > 0 && e.line < line)) line = e.line;
      }
      std::ostringstream msg;
      msg << source_ << ":" << line << ": unknown section [" << section << "]";
      throw ConfigError(msg.str());
    }
    for (const auto& [key, e] : entries) {
      if (std::find(it->second.begin(), it->second.end(), key) ==
          it->second.end()) {
        std::ostringstream msg;
        msg << source_ << ":" << e.line << ": unknown key '" << key << "' in ["
            << section << "]";
        throw ConfigError(msg.str());
      }
    }
  }
}

std::string IniDocument::where(const std::string& section,
                               const std::string& key) const {
  std::ostringstream msg;
  msg << source_ << ":" << at(section, key).line << ": [" << section << "] "
      << key;
  return msg.str();
}

std::string IniDocument::get_string(const std::string& section,
                                    const std::string& key,
                                    const std::string& fallback) const {
  return has(section, key) ? at(section, key).value : fallback;
}

double IniDocument::get_double(const std::string& section,
                               const std::string& key, double fallback) const {
  if (!has(section, key)) return fallback;
  try {
    return parse_number(at(section, key).value);
  } catch (const ConfigError& e) {
    throw ConfigError(where(section, key) + ": " + e.what());
  }
}

int IniDocument::get_int(const std::string& section, const std::string& key,
                         int fallback) const {
  if (!has(section, key)) return fallback;
  const auto& v = at(section, key).value;
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(where(section, key) + ": expected an integer, got '" + v + "'");
  }
  return out;
}

bool IniDocument::get_bool(const std::string& section, const std::string& key,
                           bool fallback) const {
  if (!has(section, key)) return fallback;
  const auto& v = at(section, key).value;
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError(where(section, key) + ": expected true/false, got '" + v + "'");
}

std::vector<double> IniDocument::get_doubles(const std::string& section,
                                             const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : get_strings(section, key)) {
    try {
      out.push_back(parse_number(item));
    } catch (const ConfigError& e) {
      throw ConfigError(where(section, key) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::string> IniDocument::get_strings(const std::string& section,
                                                  const std::string& key) const {
  if (!has(section, key)) return {};
  return split_list(at(section, key).value);
}

double parse_number(std::string_view text) {
  text = trim(text);
  double out = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(out)) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'");
  }
  return out;
}

double parse_quantity(std::string_view text, Dimension dim) {
  text = trim(text);
  const auto split = text.find_first_of(" \t");
  if (split == std::string_view::npos) {
    throw ConfigError(std::string(dimension_name(dim)) + " '" +
                      std::string(text) + "' needs an explicit unit");
  }
  const double value = parse_number(text.substr(0, split));
  const auto unit = trim(text.substr(split));
  for (const auto& u : kUnits) {
    if (u.name != unit) continue;
    if (u.dim != dim) {
      throw ConfigError("unit '" + std::string(unit) + "' is not a " +
                        dimension_name(dim) + " unit");
    }
    return value * u.scale;
  }
  throw ConfigError("unknown unit '" + std::string(unit) + "'");
}

device::DeviceParams load_device(const IniDocument& doc) {
  doc.require_known({{"device",
                      {"C0", "d", "m", "omega_m", "omega1", "omega2", "C1",
                       "C2", "Vx1", "Vx2", "Q_m", "Q_c", "T", "threshold"}}});
  auto q = [&](const char* key, Dimension dim) {
    try {
      return parse_quantity(doc.at("device", key).value, dim);
    } catch (const ConfigError& e) {
      if (!doc.has("device", key)) throw;
      throw ConfigError(doc.where("device", key) + ": " + e.what());
    }
  };
  auto n = [&](const char* key) {
    if (!doc.has("device", key)) {
      throw ConfigError(doc.source() + ": missing key '" + key + "' in [device]");
    }
    return doc.get_double("device", key, 0.0);
  };
  device::DeviceParams p;
  p.c0 = q("C0", Dimension::kCapacitance);
  p.d = q("d", Dimension::kLength);
  p.mass = q("m", Dimension::kMass);
  p.omega_m = q("omega_m", Dimension::kAngularFrequency);
  p.omega = {q("omega1", Dimension::kAngularFrequency),
             q("omega2", Dimension::kAngularFrequency)};
  p.cap = {q("C1", Dimension::kCapacitance), q("C2", Dimension::kCapacitance)};
  p.vx = {q("Vx1", Dimension::kVoltage), q("Vx2", Dimension::kVoltage)};
  p.q_m = n("Q_m");
  p.q_c = n("Q_c");
  p.temperature = q("T", Dimension::kTemperature);
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(doc.source() + ": " + e.what());
  }
  return p;
}

double device_threshold(const IniDocument& doc) {
  const double t = doc.get_double("device", "threshold", 10.0);
  if (!(t > 0.0)) {
    throw ConfigError(doc.where("device", "threshold") + ": must be positive");
  }
  return t;
}

}  // namespace cavem::config
