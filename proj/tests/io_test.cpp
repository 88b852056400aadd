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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "bea/io.hpp"
#include "test_util.hpp"

namespace bea::io {
namespace {

json entry(double re, double im = 0.0) { return json::array({re, im}); }

json diagonal_state(double a, double b, double c, double d) {
  const double v[4] = {a, b, c, d};
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(entry(r == k ? v[r] : 0.0));
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

TEST(ParseState, DataFiles) {
  const DensityMatrix mixed = parse_state(read_json_file(BEA_DATA_DIR "/maximally_mixed.json"));
  EXPECT_EQ(mixed.matrix(), maximally_mixed().matrix());
  const DensityMatrix s = parse_state(read_json_file(BEA_DATA_DIR "/singlet.json"));
  EXPECT_LE(testing::max_abs_diff(s.matrix(), singlet().matrix()), 1e-15);
}

TEST(ParseState, MalformedInputIsParseError) {
  EXPECT_THROW(parse_state(json::array()), ParseError);
  EXPECT_THROW(parse_state(json{{"rows", 1}}), ParseError);
  json bad = diagonal_state(0.25, 0.25, 0.25, 0.25);
  bad["matrix"].erase(3);
  EXPECT_THROW(parse_state(bad), ParseError);
  bad = diagonal_state(0.25, 0.25, 0.25, 0.25);
  bad["matrix"][1][2] = json::array({1.0});
  EXPECT_THROW(parse_state(bad), ParseError);
  bad = diagonal_state(0.25, 0.25, 0.25, 0.25);
  bad["matrix"][0][0] = json::array({"x", 0});
  EXPECT_THROW(parse_state(bad), ParseError);
  bad = diagonal_state(0.25, 0.25, 0.25, 0.25);
  bad["matrix"][0].push_back(entry(0));
  EXPECT_THROW(parse_state(bad), ParseError);
}

TEST(ParseState, NonPhysicalIsInvalidState) {
  EXPECT_THROW(parse_state(diagonal_state(0.5, 0.5, 0.5, -0.5)), InvalidStateError);
  EXPECT_THROW(parse_state(diagonal_state(0.5, 0.5, 0.5, 0.5)), InvalidStateError);
  json asym = diagonal_state(0.25, 0.25, 0.25, 0.25);
  asym["matrix"][0][1] = entry(0.1);
  EXPECT_THROW(parse_state(asym), InvalidStateError);
}

TEST(StateJson, RoundTrip) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = sample_density(rng, 1 + t % 4);
    const json j = json::parse(state_to_json(rho).dump());
    EXPECT_EQ(parse_matrix4(j), rho.matrix());
    EXPECT_LE(testing::max_abs_diff(parse_state(j).matrix(), rho.matrix()), 1e-12);
  }
}

TEST(ParseSettings, CanonicalFile) {
  const BellSettings s = parse_settings(read_json_file(BEA_DATA_DIR "/canonical_settings.json"));
  EXPECT_NEAR(build_bell(s).xi1(), 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(ParseSettings, Errors) {
  json s = settings_to_json(BellSettings::canonical());
  EXPECT_NO_THROW(parse_settings(s));
  json missing = s;
  missing.erase("b2");
  EXPECT_THROW(parse_settings(missing), ParseError);
  json non_unit = s;
  non_unit["a1"] = json::array({1.0, 1.0, 0.0});
  EXPECT_THROW(parse_settings(non_unit), ParseError);
  json short_vec = s;
  short_vec["a2"] = json::array({1.0, 0.0});
  EXPECT_THROW(parse_settings(short_vec), ParseError);
  EXPECT_THROW(parse_settings(json::array()), ParseError);
}

TEST(ReadJsonFile, MissingAndMalformed) {
  EXPECT_THROW(read_json_file("/nonexistent/state.json"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "bea_io_malformed.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(read_json_file(path.string()), ParseError);
  std::filesystem::remove(path);
}

TEST(ReportJson, Fields) {
  VerificationReport r;
  r.suite = "regions";
  r.samples = 0;
  r.details.emplace_back("x", 1.5);
  const json j = report_to_json(r);
  EXPECT_EQ(j["suite"], "regions");
  EXPECT_TRUE(j["worstMargin"].is_null());
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["details"]["x"], 1.5);
  for (const char* key : {"samples", "violations", "seed", "elapsedSeconds", "failures"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(VerdictJson, Fields) {
  const RegionVerdict v = classify_point(RegionId::VnTotal, 1.0, 0.5);
  const json j = verdict_to_json(v);
  EXPECT_EQ(j["region"], "vn-total");
  EXPECT_EQ(j["inside"], true);
  EXPECT_EQ(j["upperBound"].get<double>(), v.upper);
}

}  // namespace
}  // namespace bea::io
