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

// Command-line front end. Kept in a header so tests can drive it with
// in-memory streams.
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage or parse
// error, 3 invalid state.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bea/bell.hpp"
#include "bea/entropy.hpp"
#include "bea/errors.hpp"
#include "bea/io.hpp"
#include "bea/regions.hpp"
#include "bea/states.hpp"
#include "bea/verify.hpp"

namespace bea::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kInvalidState = 3 };

inline constexpr double kExtremalityEps = 1e-4;

inline std::string format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string curve_csv(RegionId region, int n_points) {
  std::string csv = "beta,bound\n";
  for (const CurveSample& p : boundary_curve(region, n_points)) {
    csv += format17(p.beta);
    csv += ',';
    csv += format17(p.bound);
    csv += '\n';
  }
  return csv;
}

inline nlohmann::json thresholds_json() {
  nlohmann::json j = nlohmann::json::object();
  nlohmann::json rounded = nlohmann::json::object();
  for (ThresholdId t : kAllThresholds) {
    j[std::string(threshold_name(t))] = threshold(t);
    rounded[std::string(threshold_name(t))] = threshold_rounded(t);
  }
  j["rounded"] = std::move(rounded);
  return j;
}

inline nlohmann::json analyze_json(const DensityMatrix& rho,
                                   const std::optional<BellSettings>& settings, int restarts,
                                   std::uint64_t seed) {
  using nlohmann::json;
  const EntropyReport lin = linear_entropy(rho);
  const EntropyReport vn = von_neumann_entropy(rho);
  json j;
  j["linear"] = io::entropy_to_json(lin);
  j["vonNeumann"] = io::entropy_to_json(vn);
  j["s12_linear"] = lin.s12;
  j["s12_vonNeumann"] = vn.s12;

  std::optional<BellOperator> op;
  if (settings) {
    op = build_bell(*settings);
    j["beta"] = beta(rho, *op);
    j["settingsSource"] = "input";
  } else {
    const BetaMaximum best = maximize_beta(rho, restarts, seed);
    op = best.op;
    j["beta"] = best.beta;
    j["betaMax"] = best.beta;
    j["settingsSource"] = "maximized";
  }
  j["settings"] = io::settings_to_json(op->settings());
  j["xi"] = json::array({op->xi1(), op->xi2()});

  json verdicts = json::array();
  for (const RegionVerdict& v : classify(rho, *op)) verdicts.push_back(io::verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);

  const auto [lin1, lin2] = entropy_inequality_check(lin);
  const auto [vn1, vn2] = entropy_inequality_check(vn);
  j["entropyInequalities"] = {{"linear", {lin1, lin2}}, {"vonNeumann", {vn1, vn2}}};

  // Sufficient conditions for |β| ≤ 2 under every Bell operator.
  j["thresholdsCleared"] = {
      {"linearEntropy", lin.s12 >= threshold(ThresholdId::LinearEntropy)},
      {"linearCondSum", lin.cond_sum >= threshold(ThresholdId::LinearCondSum)},
      {"vnEntropy", vn.s12 >= threshold(ThresholdId::VnEntropy)},
      {"vnCondSum", vn.cond_sum >= threshold(ThresholdId::VnCondSum)}};
  return j;
}

inline std::vector<VerificationReport> run_suite(const std::string& suite, std::uint64_t samples,
                                                 std::uint64_t seed, unsigned threads,
                                                 int grid_n) {
  std::vector<VerificationReport> reports;
  const bool all = suite == "all";
  if (all || suite == "regions") {
    reports.push_back(mc_region_containment(samples, seed, RankMix::uniform(), threads));
  }
  if (all || suite == "attain") {
    for (RegionId r : kAllRegions) reports.push_back(attainability_sweep(r, grid_n, threads));
  }
  if (all || suite == "extremal") {
    std::uint64_t k = 0;
    for (const auto& [lambda, xi1] : extremality_grid()) {
      reports.push_back(gibbs_extremality_test(settings_for_xi1(xi1), lambda, samples,
                                               kExtremalityEps, derive_seed(seed, k++), threads));
    }
  }
  if (all || suite == "implications") {
    reports.push_back(implication_chain_test(samples, seed, threads));
  }
  return reports;
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

// Seed default: $BEA_SEED when set, otherwise 0.
inline std::uint64_t default_seed() {
  const char* env = std::getenv("BEA_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw ParseError(std::string("invalid BEA_SEED: ") + env);
  return v;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-CHSH parameter versus entropy for two-qubit states", "bea"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const std::string seed_help = "RNG seed (default 0, or $BEA_SEED when set)";

  std::string state_path, settings_path;
  int restarts = kDefaultRestarts;
  auto* analyze = app.add_subcommand("analyze", "Entropies, beta, and region verdicts of a state");
  analyze->add_option("--state", state_path, "State JSON file")->required();
  analyze->add_option("--settings", settings_path,
                      "Settings JSON; beta is maximized over settings when omitted");
  analyze->add_option("--restarts", restarts, "Restarts for beta maximization")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", seed, seed_help);

  std::string region_flag, out_path;
  int points = 101;
  auto* curves = app.add_subcommand("curves", "Emit a region's upper boundary as CSV");
  curves->add_option("--region", region_flag, "linear-total | linear-cond | vn-total | vn-cond")
      ->required()
      ->check(CLI::IsMember({"linear-total", "linear-cond", "vn-total", "vn-cond"}));
  curves->add_option("--points", points, "Number of beta grid points (>= 2)")
      ->capture_default_str()
      ->check(CLI::Range(2, 10000000));
  curves->add_option("--out", out_path, "Output CSV file (stdout when omitted)");

  std::string suite = "all", report_path;
  std::uint64_t samples = 10000;
  unsigned threads = 1;
  int grid_n = 50;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "regions | attain | extremal | implications | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"regions", "attain", "extremal", "implications", "all"}));
  verify->add_option("--samples", samples, "Samples per suite")->capture_default_str();
  verify->add_option("--seed", seed, seed_help);
  verify->add_option("--threads", threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--grid", grid_n, "Attainability grid size per axis")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000));
  verify->add_option("--out", report_path, "Also write the report JSON to this file");

  app.add_subcommand("thresholds", "Entropy thresholds that rule out CHSH violation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) {
      const DensityMatrix rho = io::parse_state(io::read_json_file(state_path));
      std::optional<BellSettings> settings;
      if (!settings_path.empty()) settings = io::parse_settings(io::read_json_file(settings_path));
      out << analyze_json(rho, settings, restarts, seed).dump(2) << '\n';
      return kOk;
    }
    if (curves->parsed()) {
      write_output(curve_csv(*parse_region(region_flag), points), out_path, out);
      return kOk;
    }
    if (verify->parsed()) {
      const std::vector<VerificationReport> reports =
          run_suite(suite, samples, seed, threads, grid_n);
      bool passed = true;
      nlohmann::json list = nlohmann::json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed();
        list.push_back(io::report_to_json(r));
      }
      const nlohmann::json j{{"suite", suite}, {"passed", passed}, {"reports", std::move(list)}};
      const std::string text = j.dump(2) + "\n";
      out << text;
      if (!report_path.empty()) write_output(text, report_path, out);
      return passed ? kOk : kViolation;
    }
    out << thresholds_json().dump(2) << '\n';
    return kOk;
  } catch (const InvalidStateError& e) {
    err << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace bea::cli
