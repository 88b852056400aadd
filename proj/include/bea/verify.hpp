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

// Empirical verification suites: Monte Carlo containment in the four
// regions, constructive attainability of interior points, perturbative
// extremality of thermal states, and the chain
// separability ⇒ entropy inequalities ⇒ CHSH.
//
// Every per-sample computation seeds its own Rng from
// derive_seed(master, index), and tallies are merged with count/min in
// index order, so results do not depend on the thread count.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bea/bell.hpp"
#include "bea/entropy.hpp"
#include "bea/errors.hpp"
#include "bea/extremal.hpp"
#include "bea/numkit.hpp"
#include "bea/regions.hpp"
#include "bea/rng.hpp"
#include "bea/states.hpp"

namespace bea {

struct VerificationReport {
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  std::chrono::duration<double> elapsed{0.0};
  // First offending samples, enough to reproduce each one.
  std::vector<std::string> failures;
  // Suite-specific named quantities (skipped counts, witnesses, ...).
  std::vector<std::pair<std::string, double>> details;

  bool passed() const noexcept { return violations == 0; }

  std::optional<double> detail(std::string_view key) const {
    for (const auto& [k, v] : details)
      if (k == key) return v;
    return std::nullopt;
  }
};

inline constexpr std::size_t kMaxListedFailures = 50;

namespace detail {

struct SampleOutcome {
  bool counted = true;  // false: sample skipped, not part of the tally
  bool violated = false;
  double margin = std::numeric_limits<double>::infinity();
  std::string failure;
};

struct Tally {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> failures;

  void add(SampleOutcome&& o) {
    if (!o.counted) {
      ++skipped;
      return;
    }
    ++samples;
    worst_margin = std::min(worst_margin, o.margin);
    if (o.violated) {
      ++violations;
      if (failures.size() < kMaxListedFailures) failures.push_back(std::move(o.failure));
    }
  }

  void merge(Tally&& o) {
    samples += o.samples;
    violations += o.violations;
    skipped += o.skipped;
    worst_margin = std::min(worst_margin, o.worst_margin);
    for (auto& f : o.failures)
      if (failures.size() < kMaxListedFailures) failures.push_back(std::move(f));
  }
};

// Runs fn(i) for i in [0, n) on up to `threads` workers, each owning a
// contiguous index block; blocks are merged in order.
template <typename Fn>
Tally run_samples(std::uint64_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    Tally t;
    for (std::uint64_t i = 0; i < n; ++i) t.add(fn(i));
    return t;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, n);
  std::vector<Tally> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) partial[w].add(fn(i));
    });
  }
  for (auto& t : pool) t.join();
  Tally total;
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

inline VerificationReport make_report(std::string suite, std::uint64_t seed, Tally&& t,
                                      std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.samples = t.samples;
  r.violations = t.violations;
  r.worst_margin = t.worst_margin;
  r.seed = seed;
  r.failures = std::move(t.failures);
  r.elapsed = std::chrono::steady_clock::now() - start;
  if (t.skipped > 0) r.details.emplace_back("skipped", static_cast<double>(t.skipped));
  return r;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace detail

/// Distribution over Ginibre ranks 1..4.
struct RankMix {
  std::array<double, 4> weights{1.0, 1.0, 1.0, 1.0};

  static RankMix uniform() { return {}; }
  static RankMix pure_only() { return {{1.0, 0.0, 0.0, 0.0}}; }

  int draw(Rng& rng) const {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = rng.uniform() * total;
    for (int k = 0; k < 4; ++k) {
      if (u < weights[k]) return k + 1;
      u -= weights[k];
    }
    for (int k = 3; k >= 0; --k)
      if (weights[k] > 0.0) return k + 1;
    return 4;
  }
};

/// Samples n (state, Bell operator) pairs and counts verdicts outside any of
/// the four regions.
inline VerificationReport mc_region_containment(std::uint64_t n, std::uint64_t seed,
                                                RankMix mix = RankMix::uniform(),
                                                unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  detail::Tally t = detail::run_samples(n, threads, [&](std::uint64_t i) {
    Rng rng(derive_seed(seed, i));
    const int rank = mix.draw(rng);
    const DensityMatrix rho = sample_density(rng, rank);
    const BellOperator b = build_bell(BellSettings::random(rng));
    detail::SampleOutcome out;
    for (const RegionVerdict& v : classify(rho, b)) {
      out.margin = std::min(out.margin, v.margin);
      if (!v.inside && !out.violated) {
        out.violated = true;
        out.failure = "sample " + std::to_string(i) + " rank " + std::to_string(rank) +
                      " region " + std::string(region_name(v.region)) + ": beta=" +
                      detail::fmt(v.beta) + " entropy=" + detail::fmt(v.entropy) +
                      " bounds=[" + detail::fmt(v.lower) + ", " + detail::fmt(v.upper) + "]";
      }
    }
    return out;
  });
  return detail::make_report("regions", seed, std::move(t), start);
}

// ---------------------------------------------------------------------------
// Attainability

enum class AttainStatus { Reached, Unreachable, InvalidTarget };

struct Attainment {
  AttainStatus status = AttainStatus::InvalidTarget;
  double target_beta = 0.0;
  double target_entropy = 0.0;
  double beta = 0.0;
  double entropy = 0.0;
  double error = std::numeric_limits<double>::infinity();
  std::optional<DensityMatrix> state;
  std::optional<BellOperator> op;
};

inline constexpr double kAttainTolerance = 1e-4;
inline constexpr double kAttainDepth = 1e-3;

namespace detail {

// (I ⊗ U(γ))|Φ⁺⟩ with U(γ) = exp(−iγσ_y/2). Maximally entangled for every
// γ; against the canonical settings β = 2√2 cos γ.
inline DensityMatrix rotated_phi_plus(double gamma) {
  const double h = 1.0 / kSqrt2;
  const double c = std::cos(0.5 * gamma);
  const double s = std::sin(0.5 * gamma);
  // |Φ⁺⟩ = (|00⟩ + |11⟩)/√2; U|0⟩ = (c, s), U|1⟩ = (−s, c).
  return pure_state({h * c, h * s, -h * s, h * c});
}

// Linear regions: Bell-diagonal states of a Bell operator chosen per target.
inline std::pair<DensityMatrix, BellOperator> linear_construction(double b0, double s0) {
  if (s0 >= 0.5) {
    // Λ₁: S₁₂ = 3/4 − α²/4 fixes |α|; β = α·t with t = (ξ₁ ± ξ₂)/2.
    double alpha = std::sqrt(std::max(0.0, 3.0 - 4.0 * s0));
    if (b0 < 0.0) alpha = -alpha;
    const double t = alpha != 0.0 ? std::clamp(b0 / alpha, 0.0, 2.0) : 0.0;
    const double xi1 = std::clamp(t + std::sqrt(std::max(0.0, 4.0 - t * t)), 2.0, kTsirelson);
    BellOperator op = settings_for_xi1(xi1);
    const SlotPair heavy = t >= kSqrt2 ? SlotPair{BellSlot::PlusXi1, BellSlot::PlusXi2}
                                       : SlotPair{BellSlot::PlusXi1, BellSlot::MinusXi2};
    return {lambda1_state(alpha, op, heavy), op};
  }
  // Λ₂: S₁₂ = 2r(1−r) fixes r. Writing the two weighted eigenvalues as
  // 2√2(cos φ, sin φ), β = 2√2·R·cos(φ − φ₀) with R = √(r² + (1−r)²).
  const double r = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 2.0 * s0)));
  const double phi0 = std::atan2(1.0 - r, r);
  const double radius = std::hypot(r, 1.0 - r);
  const double phi = phi0 + std::acos(std::clamp(b0 / (kTsirelson * radius), -1.0, 1.0));
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const bool c_major = std::abs(c) >= std::abs(s);
  const double xi1 = std::clamp(kTsirelson * std::max(std::abs(c), std::abs(s)), 2.0, kTsirelson);
  BellOperator op = settings_for_xi1(xi1);
  BellSlot slot_r, slot_rest;
  if (c_major) {
    slot_r = c >= 0.0 ? BellSlot::PlusXi1 : BellSlot::MinusXi1;
    slot_rest = s >= 0.0 ? BellSlot::PlusXi2 : BellSlot::MinusXi2;
  } else {
    slot_r = c >= 0.0 ? BellSlot::PlusXi2 : BellSlot::MinusXi2;
    slot_rest = s >= 0.0 ? BellSlot::PlusXi1 : BellSlot::MinusXi1;
  }
  return {lambda2_state(r, op, slot_r, slot_rest), op};
}

inline double entropy_in(RegionId region, const DensityMatrix& rho) {
  switch (region) {
    case RegionId::LinearTotal: return linear_entropy(rho).s12;
    case RegionId::LinearCondSum: return linear_entropy(rho).cond_sum;
    case RegionId::VnTotal: return von_neumann_of(rho.matrix());
    case RegionId::VnCondSum: return von_neumann_entropy(rho).cond_sum;
  }
  return 0.0;
}

// von Neumann regions: with the canonical operator, mix the thermal state
// of β₀ (on the upper boundary) with a maximally entangled pure state of the
// same β₀ (entropy 0, conditional sum −2 ln 2) and bisect on the weight.
inline std::pair<DensityMatrix, BellOperator> vn_construction(RegionId region, double b0,
                                                              double s0) {
  BellOperator op = build_bell(BellSettings::canonical());
  const double bp = std::clamp(b0 / kTsirelson, -1.0 + 1e-15, 1.0 - 1e-15);
  const double lambda = std::atanh(bp) / kSqrt2;
  const DensityMatrix thermal = gibbs_state(lambda, op).first;

  double lo = 0.0, hi = std::numbers::pi;  // β decreases in γ
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (beta(rotated_phi_plus(mid), op) > b0)
      lo = mid;
    else
      hi = mid;
  }
  const DensityMatrix pure = rotated_phi_plus(0.5 * (lo + hi));

  double w_lo = 0.0, w_hi = 1.0;
  const bool rising = entropy_in(region, mix(thermal, pure, 1.0)) >=
                      entropy_in(region, mix(thermal, pure, 0.0));
  for (int it = 0; it < 80; ++it) {
    const double w = 0.5 * (w_lo + w_hi);
    const bool below = entropy_in(region, mix(thermal, pure, w)) < s0;
    if (below == rising)
      w_lo = w;
    else
      w_hi = w;
  }
  return {mix(thermal, pure, 0.5 * (w_lo + w_hi)), op};
}

}  // namespace detail

/// Builds a (state, Bell operator) pair whose image is the target point.
///
/// Linear regions use the Λ₁/Λ₂ Bell-diagonal families (for the conditional
/// sum, Bell-diagonal states have S_{2/1}+S_{1/2} = 2S₁₂ − 1). von Neumann
/// regions interpolate between a boundary thermal state and a maximally
/// entangled pure state at the same β. Targets outside the region are
/// InvalidTarget; a construction missing the target by more than 1e-4 in
/// either coordinate is Unreachable.
inline Attainment attain_point(RegionId region, double b0, double s0) {
  Attainment a;
  a.target_beta = b0;
  a.target_entropy = s0;
  if (!(std::abs(b0) <= kTsirelson)) return a;
  const double depth = std::min(s0 - lower_bound(region), upper_bound(region, b0) - s0);
  if (!(depth >= 0.0)) return a;

  std::pair<DensityMatrix, BellOperator> built = [&] {
    switch (region) {
      case RegionId::LinearTotal: return detail::linear_construction(b0, s0);
      case RegionId::LinearCondSum: return detail::linear_construction(b0, 0.5 * (s0 + 1.0));
      default: return detail::vn_construction(region, b0, s0);
    }
  }();
  a.beta = beta(built.first, built.second);
  a.entropy = detail::entropy_in(region, built.first);
  a.error = std::max(std::abs(a.beta - b0), std::abs(a.entropy - s0));
  a.status = a.error <= kAttainTolerance ? AttainStatus::Reached : AttainStatus::Unreachable;
  a.state = std::move(built.first);
  a.op = std::move(built.second);
  return a;
}

/// Attempts every point of a gridN × gridN grid over
/// [−2√2, 2√2] × [lower, ceiling] that lies at least 1e-3 inside the region.
inline VerificationReport attainability_sweep(RegionId region, int grid_n, unsigned threads = 1) {
  if (grid_n < 2) throw DomainError("attainability grid needs gridN >= 2");
  const auto start = std::chrono::steady_clock::now();
  const double lo = lower_bound(region);
  const double ceiling = region_ceiling(region);
  const double span = grid_n - 1.0;
  const auto n = static_cast<std::uint64_t>(grid_n) * static_cast<std::uint64_t>(grid_n);
  detail::Tally t = detail::run_samples(n, threads, [&](std::uint64_t idx) {
    const auto i = static_cast<double>(idx / static_cast<std::uint64_t>(grid_n));
    const auto j = static_cast<double>(idx % static_cast<std::uint64_t>(grid_n));
    const double b0 = kTsirelson * (2.0 * i - span) / span;
    const double s0 = lo + (ceiling - lo) * j / span;
    detail::SampleOutcome out;
    if (std::min(s0 - lo, upper_bound(region, b0) - s0) < kAttainDepth) {
      out.counted = false;
      return out;
    }
    const Attainment a = attain_point(region, b0, s0);
    out.margin = kAttainTolerance - a.error;
    if (a.status != AttainStatus::Reached) {
      out.violated = true;
      out.failure = "unreachable (beta=" + detail::fmt(b0) + ", entropy=" + detail::fmt(s0) +
                    "): got (" + detail::fmt(a.beta) + ", " + detail::fmt(a.entropy) + ")";
    }
    return out;
  });
  VerificationReport r = detail::make_report(
      "attain:" + std::string(region_name(region)), 0, std::move(t), start);
  // Grid points too close to the boundary are excluded, not skipped samples.
  r.details.clear();
  return r;
}

// ---------------------------------------------------------------------------
// Thermal-state extremality

struct EntropyPair {
  double s12;
  double cond_sum;
};

inline EntropyPair vn_pair(const DensityMatrix& rho) {
  const EntropyReport r = von_neumann_entropy(rho);
  return {r.s12, r.cond_sum};
}

// Change in (S₁₂, S_{2/1}+S_{1/2}) when moving from ρ to ρ + δ. nullopt if
// ρ + δ is not a state.
inline std::optional<EntropyPair> perturbation_gain(const DensityMatrix& rho,
                                                    const Matrix4& delta) {
  std::optional<DensityMatrix> moved;
  try {
    moved = validate_density(rho.matrix() + delta);
  } catch (const InvalidStateError&) {
    return std::nullopt;
  }
  const EntropyPair base = vn_pair(rho);
  const EntropyPair next = vn_pair(*moved);
  return EntropyPair{next.s12 - base.s12, next.cond_sum - base.cond_sum};
}

/// Projects a Hermitian direction onto Tr δ = 0, Tr(Bδ) = 0. Exact in one
/// step since Tr B = 0 and Tr B² = 16.
inline Matrix4 project_constraints(const Matrix4& h, const BellOperator& b) {
  Matrix4 d = h - (h.trace().real() / 4.0) * Matrix4::identity();
  d -= (trace_of_product(b.matrix(), d).real() / 16.0) * b.matrix();
  return hermitian_part(d);
}

inline Matrix4 random_hermitian(Rng& rng) {
  Matrix4 h;
  for (std::size_t i = 0; i < 4; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < 4; ++j) {
      h(i, j) = rng.complex_normal();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

inline constexpr double kExtremalityConstant = 10.0;

/// Random constraint-preserving perturbations of size eps around the
/// thermal state exp(λB)/Z. Neither S₁₂ nor the conditional sum may rise by
/// more than 10·eps³. Perturbations that leave the state space are skipped.
inline VerificationReport gibbs_extremality_test(const BellOperator& b, double lambda,
                                                 std::uint64_t n_perturbations, double eps,
                                                 std::uint64_t seed, unsigned threads = 1) {
  if (!(eps > 0.0 && eps <= 1e-3)) throw DomainError("extremality eps must lie in (0, 1e-3]");
  const auto start = std::chrono::steady_clock::now();
  const DensityMatrix rho = gibbs_state(lambda, b).first;
  const double allowed = kExtremalityConstant * eps * eps * eps;
  detail::Tally t = detail::run_samples(n_perturbations, threads, [&](std::uint64_t k) {
    Rng rng(derive_seed(seed, k));
    detail::SampleOutcome out;
    Matrix4 d = project_constraints(random_hermitian(rng), b);
    const double n = d.frobenius_norm();
    if (!(n > 0.0)) {
      out.counted = false;
      return out;
    }
    d = (eps / n) * d;
    const std::optional<EntropyPair> gain = perturbation_gain(rho, d);
    if (!gain) {
      out.counted = false;
      return out;
    }
    out.margin = allowed - std::max(gain->s12, gain->cond_sum);
    if (out.margin < 0.0) {
      out.violated = true;
      out.failure = "perturbation " + std::to_string(k) + ": dS12=" + detail::fmt(gain->s12) +
                    " dCondSum=" + detail::fmt(gain->cond_sum) + " allowed=" + detail::fmt(allowed);
    }
    return out;
  });
  VerificationReport r = detail::make_report("extremal", seed, std::move(t), start);
  r.details.emplace_back("lambda", lambda);
  r.details.emplace_back("xi1", b.xi1());
  r.details.emplace_back("eps", eps);
  return r;
}

struct SecondVariation {
  double finite_difference;       // (S(ρ+δ) − 2S(ρ) + S(ρ−δ))/2
  double predicted;               // −½ Tr(ρ⁻¹δ²)
  double cond_finite_difference;  // same for the conditional sum
  double cond_predicted;          // Tr δρ₁² + Tr δρ₂² − Tr(ρ⁻¹δ²)

  double relative_error() const {
    return std::abs(finite_difference - predicted) / std::abs(predicted);
  }
  double cond_relative_error() const {
    return std::abs(cond_finite_difference - cond_predicted) / std::abs(cond_predicted);
  }
};

/// Second variation of the entropies along a random constraint-preserving
/// direction of norm h that commutes with the thermal state (diagonal in
/// the Bell basis), compared with the closed-form second-order terms.
inline SecondVariation second_variation_check(const BellOperator& b, double lambda, double h,
                                              std::uint64_t seed) {
  const DensityMatrix rho = gibbs_state(lambda, b).first;
  const BellBasis basis = bell_basis(b);
  Rng rng(seed);
  // d ⟂ (1,1,1,1) and d ⟂ (ξ₁, ξ₂, −ξ₂, −ξ₁); those two are orthogonal.
  std::array<double, 4> d;
  for (double& x : d) x = rng.normal();
  const std::array<double, 4> spec = b.spectrum();
  double mean = 0.0, along = 0.0, spec_norm2 = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    mean += d[k] / 4.0;
    along += d[k] * spec[k];
    spec_norm2 += spec[k] * spec[k];
  }
  double dn = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    d[k] -= mean + along / spec_norm2 * spec[k];
    dn += d[k] * d[k];
  }
  dn = std::sqrt(dn);
  Matrix4 delta;
  for (std::size_t k = 0; k < 4; ++k)
    delta += (h * d[k] / dn) * outer(basis.vectors[k], basis.vectors[k]);
  delta = hermitian_part(delta);

  const EntropyPair mid = vn_pair(rho);
  const EntropyPair plus = vn_pair(validate_density(rho.matrix() + delta));
  const EntropyPair minus = vn_pair(validate_density(rho.matrix() - delta));

  const Matrix4 inverse = matrix_function(rho.matrix(), [](double x) { return 1.0 / x; });
  const double inv_term = trace_of_product(inverse, delta * delta).real();
  const Matrix2 d1 = partial_trace(delta, Subsystem::First);
  const Matrix2 d2 = partial_trace(delta, Subsystem::Second);
  const double local = trace_of_product(d1, d1).real() + trace_of_product(d2, d2).real();

  return {0.5 * (plus.s12 - 2.0 * mid.s12 + minus.s12), -0.5 * inv_term,
          0.5 * (plus.cond_sum - 2.0 * mid.cond_sum + minus.cond_sum), local - inv_term};
}

// ---------------------------------------------------------------------------
// Implication chain

namespace detail {

inline Matrix2 random_su2(Rng& rng) {
  const BlochVector n = BlochVector::random(rng);
  const double theta = std::numbers::pi * rng.uniform();
  return std::cos(theta) * Matrix2::identity() +
         Complex(0.0, std::sin(theta)) * n.observable();
}

// Broad proposal mixing four shapes so that accepted states straddle the
// entropy thresholds: Ginibre states diluted toward I/4, pure states
// blended with full-rank noise, and locally rotated Bell-diagonal states
// with either Dirichlet weights or two dominant weights (the states that
// sit on the threshold corner S₁₂ = 1/2, β = 2).
inline DensityMatrix proposal_state(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.25) {
    const int rank = 1 + static_cast<int>(rng.uniform() * 4.0) % 4;
    return mix(sample_density(rng, rank), maximally_mixed(), rng.uniform());
  }
  if (u < 0.5) {
    return mix(sample_density(rng, 1), sample_density(rng, 4), rng.uniform());
  }
  const double h = 1.0 / kSqrt2;
  const std::array<Vector4, 4> bell{Vector4{h, 0, 0, h}, Vector4{h, 0, 0, -h},
                                    Vector4{0, h, h, 0}, Vector4{0, h, -h, 0}};
  std::array<double, 4> w;
  double total = 0.0;
  if (u < 0.75) {
    for (double& x : w) {
      x = -std::log(1.0 - rng.uniform());
      total += x;
    }
  } else {
    const double noise = 0.05 * rng.uniform();
    w.fill(noise);
    const std::size_t first = static_cast<std::size_t>(rng.uniform() * 4.0) % 4;
    const std::size_t second = (first + 1 + static_cast<std::size_t>(rng.uniform() * 3.0) % 3) % 4;
    const double split = rng.uniform();
    w[first] += split;
    w[second] += 1.0 - split;
    total = 1.0 + 4.0 * noise;
  }
  Matrix4 m;
  for (std::size_t k = 0; k < 4; ++k) m += (w[k] / total) * outer(bell[k], bell[k]);
  const Matrix4 u4 = kron(random_su2(rng), random_su2(rng));
  return validate_density(u4 * m * u4.adjoint());
}

}  // namespace detail

/// Separable states satisfy S₁₂ ≥ max(S₁, S₂) in linear entropy.
inline VerificationReport separable_entropy_test(std::uint64_t n, std::uint64_t seed,
                                                 unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  detail::Tally t = detail::run_samples(n, threads, [&](std::uint64_t i) {
    Rng rng(derive_seed(seed, i));
    const int factor_rank = rng.uniform() < 0.5 ? 1 : 2;
    const int terms = 1 + static_cast<int>(rng.uniform() * 2.0 * kDefaultSeparableTerms);
    const DensityMatrix rho = sample_separable(rng, terms, factor_rank).second;
    const EntropyReport lin = linear_entropy(rho);
    const auto [ok1, ok2] = entropy_inequality_check(lin);
    detail::SampleOutcome out;
    out.margin = lin.s12 - std::max(lin.s1, lin.s2);
    if (!ok1 || !ok2) {
      out.violated = true;
      out.failure = "separable sample " + std::to_string(i) + ": S12=" + detail::fmt(lin.s12) +
                    " S1=" + detail::fmt(lin.s1) + " S2=" + detail::fmt(lin.s2);
    }
    return out;
  });
  return detail::make_report("implications:separable", seed, std::move(t), start);
}

enum class LinearCriterion { EntropyAtLeastHalf, CondSumNonNegative };

inline constexpr double kCriterionTolerance = 1e-6;

/// States meeting a linear-entropy criterion never reach maximize_beta > 2.
/// Sample i draws proposals from its own stream until one satisfies the
/// criterion (at most 1000 tries, otherwise it is skipped).
inline VerificationReport criterion_beta_test(LinearCriterion criterion, std::uint64_t n,
                                              std::uint64_t seed, unsigned threads = 1,
                                              int restarts = kDefaultRestarts) {
  const auto start = std::chrono::steady_clock::now();
  detail::Tally t = detail::run_samples(n, threads, [&](std::uint64_t i) {
    Rng rng(derive_seed(seed, i));
    detail::SampleOutcome out;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const DensityMatrix rho = detail::proposal_state(rng);
      const EntropyReport lin = linear_entropy(rho);
      const bool meets = criterion == LinearCriterion::EntropyAtLeastHalf ? lin.s12 >= 0.5
                                                                          : lin.cond_sum >= 0.0;
      if (!meets) continue;
      const BetaMaximum best = maximize_beta(rho, restarts, derive_seed(~seed, i));
      out.margin = 2.0 + kCriterionTolerance - best.beta;
      if (out.margin < 0.0) {
        out.violated = true;
        out.failure = "sample " + std::to_string(i) + ": S12=" + detail::fmt(lin.s12) +
                      " condSum=" + detail::fmt(lin.cond_sum) +
                      " betaMax=" + detail::fmt(best.beta);
      }
      return out;
    }
    out.counted = false;
    return out;
  });
  return detail::make_report(criterion == LinearCriterion::EntropyAtLeastHalf
                                 ? "implications:linear-entropy"
                                 : "implications:linear-cond",
                             seed, std::move(t), start);
}

inline constexpr double kWitnessMinBeta = 2.1;

/// Shows that a non-negative conditional von Neumann sum does not rule out
/// CHSH violation: the thermal state of the canonical operator just below
/// the zero crossing of the conditional bound has a non-negative sum and
/// β > 2. Passes when a witness with β ≥ 2.1 is found.
inline VerificationReport vn_cond_witness(std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const BellOperator op = build_bell(BellSettings::canonical());
  const double target = threshold(ThresholdId::VnCondZeroBeta) - 0.005;
  const double lambda = std::atanh(target / kTsirelson) / kSqrt2;
  const DensityMatrix rho = gibbs_state(lambda, op).first;
  const double cond = von_neumann_entropy(rho).cond_sum;
  const BetaMaximum best = maximize_beta(rho, kDefaultRestarts, seed);

  detail::Tally t;
  detail::SampleOutcome out;
  out.margin = std::min(cond, best.beta - kWitnessMinBeta);
  if (out.margin < 0.0) {
    out.violated = true;
    out.failure = "no witness: condSum=" + detail::fmt(cond) + " betaMax=" + detail::fmt(best.beta);
  }
  t.add(std::move(out));
  VerificationReport r = detail::make_report("implications:vn-cond-witness", seed, std::move(t), start);
  r.details.emplace_back("witnessBeta", best.beta);
  r.details.emplace_back("witnessCondSum", cond);
  r.details.emplace_back("witnessLambda", lambda);
  return r;
}

/// All four parts of the implication chain in one report. The witness part
/// runs only when n ≥ 1.
inline VerificationReport implication_chain_test(std::uint64_t n, std::uint64_t seed,
                                                 unsigned threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> parts;
  parts.push_back(separable_entropy_test(n, seed, threads));
  parts.push_back(criterion_beta_test(LinearCriterion::EntropyAtLeastHalf, n, seed, threads));
  parts.push_back(criterion_beta_test(LinearCriterion::CondSumNonNegative, n, seed, threads));
  if (n > 0) parts.push_back(vn_cond_witness(seed));

  VerificationReport r;
  r.suite = "implications";
  r.seed = seed;
  for (auto& p : parts) {
    r.samples += p.samples;
    r.violations += p.violations;
    r.worst_margin = std::min(r.worst_margin, p.worst_margin);
    for (auto& f : p.failures)
      if (r.failures.size() < kMaxListedFailures) r.failures.push_back(p.suite + ": " + f);
    for (auto& d : p.details) r.details.push_back(std::move(d));
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Ten (λ, ξ₁) combinations used by the extremality suite.
inline std::vector<std::pair<double, double>> extremality_grid() {
  std::vector<std::pair<double, double>> grid;
  for (double xi1 : {kTsirelson, 2.4})
    for (double lambda : {-0.5, 0.1, 0.3, 0.6, 1.0}) grid.emplace_back(lambda, xi1);
  return grid;
}

}  // namespace bea
