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

// Boundaries of the (β, entropy) compatibility regions, membership tests,
// and the entropy thresholds above which no CHSH violation is possible.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bea/bell.hpp"
#include "bea/entropy.hpp"
#include "bea/errors.hpp"
#include "bea/states.hpp"

namespace bea {

enum class RegionId { LinearTotal, LinearCondSum, VnTotal, VnCondSum };

inline constexpr std::array<RegionId, 4> kAllRegions{
    RegionId::LinearTotal, RegionId::LinearCondSum, RegionId::VnTotal,
    RegionId::VnCondSum};

inline std::string_view region_name(RegionId r) {
  switch (r) {
    case RegionId::LinearTotal: return "linear-total";
    case RegionId::LinearCondSum: return "linear-cond";
    case RegionId::VnTotal: return "vn-total";
    case RegionId::VnCondSum: return "vn-cond";
  }
  return "unknown";
}

inline std::optional<RegionId> parse_region(std::string_view name) {
  for (RegionId r : kAllRegions)
    if (region_name(r) == name) return r;
  return std::nullopt;
}

inline constexpr double kMembershipTolerance = 1e-9;

// 2ln2 − (1+β′)ln(1+β′) − (1−β′)ln(1−β′), β′ = β/(2√2)
inline double vn_total_bound(double b) {
  const double bp = std::min(std::abs(b) / kTsirelson, 1.0);
  return 2.0 * kLn2 - xlogx(1.0 + bp) - xlogx(1.0 - bp);
}

inline double lower_bound(RegionId region) {
  switch (region) {
    case RegionId::LinearTotal: return 0.0;
    case RegionId::LinearCondSum: return -1.0;
    case RegionId::VnTotal: return 0.0;
    case RegionId::VnCondSum: return -2.0 * kLn2;
  }
  return 0.0;
}

/// Largest entropy compatible with β in the given region. At |β| = 2√2 the
/// bounds meet the lower bound; rounding below it is clamped away.
inline double upper_bound(RegionId region, double b) {
  if (!(std::abs(b) <= kTsirelson + 1e-12)) {
    throw DomainError("|beta| exceeds 2*sqrt(2): " + std::to_string(b));
  }
  const double b2 = b * b;
  double up = 0.0;
  switch (region) {
    case RegionId::LinearTotal:
      up = std::min(0.75 - b2 / 16.0, 1.0 - b2 / 8.0);
      break;
    case RegionId::LinearCondSum:
      up = std::min(0.5 - b2 / 8.0, 1.0 - b2 / 4.0);
      break;
    case RegionId::VnTotal:
      up = vn_total_bound(b);
      break;
    case RegionId::VnCondSum:
      up = 2.0 * vn_total_bound(b) - 2.0 * kLn2;
      break;
  }
  return std::max(up, lower_bound(region));
}

// Maximum of upper_bound over β (attained at β = 0).
inline double region_ceiling(RegionId region) { return upper_bound(region, 0.0); }

struct RegionVerdict {
  RegionId region;
  double beta;
  double entropy;
  double upper;
  double lower;
  bool inside;
  double margin;  // min(entropy − lower, upper − entropy); negative outside
};

/// Verdict for a single point. β within 1e-9 beyond the Tsirelson bound is
/// pulled back onto it before evaluating the boundary.
inline RegionVerdict classify_point(RegionId region, double b, double entropy) {
  if (std::abs(b) > kTsirelson && std::abs(b) <= kTsirelson + kMembershipTolerance) {
    b = std::copysign(kTsirelson, b);
  }
  const double up = upper_bound(region, b);
  const double lo = lower_bound(region);
  const bool inside = lo - kMembershipTolerance <= entropy &&
                      entropy <= up + kMembershipTolerance;
  return {region, b, entropy, up, lo, inside, std::min(entropy - lo, up - entropy)};
}

inline double region_entropy(RegionId region, const EntropyReport& linear,
                             const EntropyReport& vn) {
  switch (region) {
    case RegionId::LinearTotal: return linear.s12;
    case RegionId::LinearCondSum: return linear.cond_sum;
    case RegionId::VnTotal: return vn.s12;
    case RegionId::VnCondSum: return vn.cond_sum;
  }
  return 0.0;
}

/// One verdict per region, in kAllRegions order.
inline std::array<RegionVerdict, 4> classify(const DensityMatrix& rho,
                                             const BellOperator& b) {
  const double bv = beta(rho, b);
  const EntropyReport lin = linear_entropy(rho);
  const EntropyReport vn = von_neumann_entropy(rho);
  std::array<RegionVerdict, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const RegionId r = kAllRegions[k];
    out[k] = classify_point(r, bv, region_entropy(r, lin, vn));
  }
  return out;
}

enum class ThresholdId { LinearEntropy, LinearCondSum, VnEntropy, VnCondSum, VnCondZeroBeta };

inline constexpr std::array<ThresholdId, 5> kAllThresholds{
    ThresholdId::LinearEntropy, ThresholdId::LinearCondSum, ThresholdId::VnEntropy,
    ThresholdId::VnCondSum, ThresholdId::VnCondZeroBeta};

inline std::string_view threshold_name(ThresholdId t) {
  switch (t) {
    case ThresholdId::LinearEntropy: return "linearEntropy";
    case ThresholdId::LinearCondSum: return "linearCondSum";
    case ThresholdId::VnEntropy: return "vnEntropy";
    case ThresholdId::VnCondSum: return "vnCondSum";
    case ThresholdId::VnCondZeroBeta: return "vnCondZeroBeta";
  }
  return "unknown";
}

// Published three-digit values, for display alongside the computed ones.
inline double threshold_rounded(ThresholdId t) {
  switch (t) {
    case ThresholdId::LinearEntropy: return 0.5;
    case ThresholdId::LinearCondSum: return 0.0;
    case ThresholdId::VnEntropy: return 0.833;
    case ThresholdId::VnCondSum: return 0.280;
    case ThresholdId::VnCondZeroBeta: return 2.206;
  }
  return 0.0;
}

/// Entropy thresholds are the region bounds at β = 2: a state whose entropy
/// lies above them cannot reach |β| > 2. VnCondZeroBeta is instead the β at
/// which the conditional von Neumann bound crosses zero, found by bisection
/// on [2, 2√2] to 1e-10.
inline double threshold(ThresholdId which) {
  const double log_term = kSqrt2 * std::log(1.0 + kSqrt2);
  switch (which) {
    case ThresholdId::LinearEntropy: return 0.5;
    case ThresholdId::LinearCondSum: return 0.0;
    case ThresholdId::VnEntropy: return 3.0 * kLn2 - log_term;
    case ThresholdId::VnCondSum: return 4.0 * kLn2 - 2.0 * log_term;
    case ThresholdId::VnCondZeroBeta: {
      double lo = 2.0, hi = kTsirelson;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (upper_bound(RegionId::VnCondSum, mid) > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

struct CurveSample {
  double beta;
  double bound;
};

/// upper_bound sampled on a uniform β grid over [−2√2, 2√2]. Grid points are
/// 2√2·(2i − (n−1))/(n−1), so the endpoints are exact and the grid is
/// symmetric about 0.
inline std::vector<CurveSample> boundary_curve(RegionId region, int n_points) {
  if (n_points < 2) throw DomainError("boundary curve needs at least 2 points");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n_points));
  const double span = static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double b = kTsirelson * (2.0 * i - span) / span;
    out.push_back({b, upper_bound(region, b)});
  }
  return out;
}

}  // namespace bea
