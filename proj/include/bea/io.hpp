// Copyright 2026 The bea Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON formats shared with the command-line tool.
//
//   state     {"matrix": [[[re, im], x4], x4]}   rows of a 4x4 matrix
//   settings  {"a1": [x, y, z], "b1": ..., "a2": ..., "b2": ...}
//
// plus serializers for entropy reports, region verdicts, and verification
// reports.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "bea/bell.hpp"
#include "bea/entropy.hpp"
#include "bea/errors.hpp"
#include "bea/regions.hpp"
#include "bea/states.hpp"
#include "bea/verify.hpp"

namespace bea::io {

using nlohmann::json;

inline double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite number");
  return x;
}

/// Parses the "matrix" entry without checking that it is a state.
inline Matrix4 parse_matrix4(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) {
    throw ParseError("state JSON must be an object with key \"matrix\"");
  }
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 4) throw ParseError("\"matrix\" must have 4 rows");
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError("row " + std::to_string(r) + " must have 4 entries");
    }
    for (std::size_t c = 0; c < 4; ++c) {
      const json& e = row[c];
      const std::string where = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
      if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be [re, im]");
      m(r, c) = Complex(number_at(e[0], where), number_at(e[1], where));
    }
  }
  return m;
}

/// Parses and validates a state; ParseError for bad shape, InvalidStateError
/// for a matrix that is not a density matrix.
inline DensityMatrix parse_state(const json& j) { return validate_density(parse_matrix4(j)); }

inline json matrix_to_json(const Matrix4& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return json{{"matrix", std::move(rows)}};
}

inline json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

inline BlochVector parse_bloch(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("settings missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) throw ParseError("\"" + key + "\" must be [x, y, z]");
  try {
    return BlochVector::unit(number_at(v[0], key), number_at(v[1], key), number_at(v[2], key));
  } catch (const DomainError& e) {
    throw ParseError("\"" + key + "\": " + e.what());
  }
}

inline BellSettings parse_settings(const json& j) {
  if (!j.is_object()) throw ParseError("settings JSON must be an object");
  return {parse_bloch(j, "a1"), parse_bloch(j, "b1"), parse_bloch(j, "a2"), parse_bloch(j, "b2")};
}

inline json bloch_to_json(const BlochVector& v) { return json::array({v.x(), v.y(), v.z()}); }

inline json settings_to_json(const BellSettings& s) {
  return json{{"a1", bloch_to_json(s.a1)},
              {"b1", bloch_to_json(s.b1)},
              {"a2", bloch_to_json(s.a2)},
              {"b2", bloch_to_json(s.b2)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline json entropy_to_json(const EntropyReport& r) {
  return json{{"kind", r.kind == EntropyKind::Linear ? "linear" : "vonNeumann"},
              {"s12", r.s12},
              {"s1", r.s1},
              {"s2", r.s2},
              {"cond21", r.cond21},
              {"cond12", r.cond12},
              {"condSum", r.cond_sum}};
}

inline json verdict_to_json(const RegionVerdict& v) {
  return json{{"region", std::string(region_name(v.region))},
              {"beta", v.beta},
              {"entropy", v.entropy},
              {"upperBound", v.upper},
              {"lowerBound", v.lower},
              {"inside", v.inside},
              {"margin", v.margin}};
}

// Non-finite margins (empty suites) serialize as null.
inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json report_to_json(const VerificationReport& r) {
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = finite_or_null(v);
  return json{{"suite", r.suite},
              {"samples", r.samples},
              {"violations", r.violations},
              {"worstMargin", finite_or_null(r.worst_margin)},
              {"seed", r.seed},
              {"elapsedSeconds", r.elapsed.count()},
              {"passed", r.passed()},
              {"failures", r.failures},
              {"details", std::move(details)}};
}

}  // namespace bea::io
