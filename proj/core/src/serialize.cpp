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

#include "cavem/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cavem/error.hpp"
#include "json.hpp"

namespace cavem::serialize {

namespace {

using nlohmann::json;

json complex_array(const Complex* data, Eigen::Index n) {
  json out = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    out.push_back({data[i].real(), data[i].imag()});
  }
  return out;
}

json matrix_rows(const CMatrix& m) {
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      rm = m;
  return complex_array(rm.data(), rm.size());
}

json space_json(const fock::FockSpace& space) {
  return {{"dims", space.dims()}, {"labels", space.labels()}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("serialize: malformed JSON: ") + e.what());
  }
}

fock::FockSpace read_space(const json& j) {
  try {
    return fock::FockSpace(j.at("dims").get<std::vector<int>>(),
                           j.at("labels").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("serialize: bad space: ") + e.what());
  }
}

std::vector<Complex> read_complex(const json& j, Eigen::Index expected) {
  std::vector<Complex> out;
  try {
    const auto& data = j.at("data");
    if (static_cast<Eigen::Index>(data.size()) != expected) {
      throw InvalidArgument("serialize: data has wrong length");
    }
    out.reserve(data.size());
    for (const auto& z : data) {
      out.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("serialize: bad data: ") + e.what());
  }
  return out;
}

CMatrix read_matrix(const json& j, Eigen::Index d) {
  const auto v = read_complex(j, d * d);
  CMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = v[static_cast<std::size_t>(r * d + c)];
  }
  return m;
}

json number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_json(const fock::QuantumState& state) {
  json j = space_json(state.space());
  if (state.is_pure()) {
    j["kind"] = "pure";
    j["data"] = complex_array(state.amplitudes().data(), state.amplitudes().size());
  } else {
    j["kind"] = "mixed";
    j["data"] = matrix_rows(state.density());
  }
  return j.dump();
}

std::string to_json(const fock::Operator& op) {
  json j = space_json(op.space());
  j["kind"] = "operator";
  j["data"] = matrix_rows(op.matrix());
  return j.dump();
}

fock::QuantumState state_from_json(std::string_view text) {
  const json j = parse(text);
  auto space = read_space(j);
  const std::string kind = j.value("kind", "");
  const Eigen::Index d = space.total_dim();
  if (kind == "pure") {
    const auto v = read_complex(j, d);
    CVector psi = Eigen::Map<const CVector>(v.data(), d);
    return fock::QuantumState::pure(std::move(space), std::move(psi));
  }
  if (kind == "mixed") {
    return fock::QuantumState::mixed(std::move(space), read_matrix(j, d));
  }
  throw InvalidArgument("serialize: state kind must be 'pure' or 'mixed'");
}

fock::Operator operator_from_json(std::string_view text) {
  const json j = parse(text);
  auto space = read_space(j);
  const Eigen::Index d = space.total_dim();
  return fock::Operator(std::move(space), read_matrix(j, d));
}

std::string to_json(const gaussian::GaussianState& g) {
  json cov = json::array();
  for (Eigen::Index r = 0; r < g.cov.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < g.cov.cols(); ++c) row.push_back(g.cov(r, c));
    cov.push_back(std::move(row));
  }
  json mean = json::array();
  for (Eigen::Index i = 0; i < g.mean.size(); ++i) mean.push_back(g.mean(i));
  return json{{"mean", mean}, {"cov", cov}}.dump();
}

gaussian::GaussianState gaussian_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    const auto mean = j.at("mean").get<std::vector<double>>();
    const auto cov = j.at("cov").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(mean.size());
    gaussian::GaussianState g{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    if (static_cast<Eigen::Index>(cov.size()) != n) {
      throw InvalidArgument("serialize: covariance shape mismatch");
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      g.mean(r) = mean[static_cast<std::size_t>(r)];
      const auto& row = cov[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw InvalidArgument("serialize: covariance shape mismatch");
      }
      for (Eigen::Index c = 0; c < n; ++c) g.cov(r, c) = row[static_cast<std::size_t>(c)];
    }
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("serialize: bad Gaussian state: ") + e.what());
  }
}

std::string covariance_csv(const gaussian::GaussianState& g) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < g.cov.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cov.cols(); ++c) {
      if (c) out << ',';
      out << format_number(g.cov(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const lindblad::EvolutionResult& result,
                    bool include_states) {
  json j;
  j["times"] = result.times;
  json diags = json::array();
  for (const auto& d : result.diagnostics) {
    diags.push_back({{"trace_drift", number(d.trace_drift)},
                     {"min_eigenvalue", number(d.min_eigenvalue)},
                     {"top_level_population", number(d.top_level_population)},
                     {"step", number(d.step)}});
  }
  j["diagnostics"] = std::move(diags);
  j["warnings"] = result.warnings;
  if (include_states) {
    json states = json::array();
    for (const auto& s : result.states) states.push_back(json::parse(to_json(s)));
    j["states"] = std::move(states);
  }
  return j.dump(2);
}

}  // namespace cavem::serialize
