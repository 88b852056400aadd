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

// State families that attain the region boundaries: Bell-diagonal mixtures
// (Λ₁, Λ₂), the thermal family exp(λB)/Z with its analytic (β, S₁₂) curve,
// and the unit-trace auxiliary matrix ρ′ used for conditional entropies.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bea/bell.hpp"
#include "bea/entropy.hpp"
#include "bea/errors.hpp"
#include "bea/numkit.hpp"
#include "bea/states.hpp"

namespace bea {

/// Σ w_k |ψ_k⟩⟨ψ_k| over the Bell basis; weights indexed by BellSlot.
inline DensityMatrix bell_diagonal_state(const BellBasis& basis,
                                         const std::array<double, 4>& weights) {
  Matrix4 m;
  for (std::size_t k = 0; k < 4; ++k) {
    if (weights[k] != 0.0) m += weights[k] * outer(basis.vectors[k], basis.vectors[k]);
  }
  return validate_density(m);
}

/// Settings in the x-z plane whose Bell operator has the requested ξ₁:
/// a₂ ⟂ b₂ and |a₁×b₁| = (ξ₁² − 4)/4.
inline BellOperator settings_for_xi1(double xi1) {
  if (!(xi1 >= 2.0 - 1e-12 && xi1 <= kTsirelson + 1e-12)) {
    throw DomainError("xi1 must lie in [2, 2*sqrt(2)], got " + std::to_string(xi1));
  }
  const double sin_theta = std::clamp((xi1 * xi1 - 4.0) / 4.0, 0.0, 1.0);
  const double cos_theta = std::sqrt(1.0 - sin_theta * sin_theta);
  const double h = 1.0 / kSqrt2;
  return build_bell(BlochVector::unit(1, 0, 0),
                    BlochVector::normalized({cos_theta, 0.0, sin_theta}),
                    BlochVector::unit(h, 0, h), BlochVector::unit(h, 0, -h));
}

using SlotPair = std::pair<BellSlot, BellSlot>;

/// Λ₁: weight (1+α)/4 on the two slots in `heavy`, (1−α)/4 on the other two.
/// With the default slots β = α(ξ₁+ξ₂)/2; choosing (PlusXi1, MinusXi2) gives
/// β = α(ξ₁−ξ₂)/2. Linear S₁₂ = 3/4 − α²/4 either way.
inline DensityMatrix lambda1_state(double alpha, const BellOperator& b,
                                   SlotPair heavy = {BellSlot::PlusXi1, BellSlot::PlusXi2}) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw DomainError("lambda1 alpha must lie in [-1, 1]");
  }
  if (heavy.first == heavy.second) throw DomainError("lambda1 slots must differ");
  std::array<double, 4> w;
  w.fill(0.25 * (1.0 - alpha));
  w[static_cast<std::size_t>(heavy.first)] = 0.25 * (1.0 + alpha);
  w[static_cast<std::size_t>(heavy.second)] = 0.25 * (1.0 + alpha);
  return bell_diagonal_state(bell_basis(b), w);
}

/// Λ₂: weight r on slot `first`, 1 − r on slot `second`. Linear
/// S₁₂ = 2r(1−r) and β = r·ξ_first + (1−r)·ξ_second. Picking negative slots
/// reaches negative β.
inline DensityMatrix lambda2_state(double r, const BellOperator& b,
                                   BellSlot first = BellSlot::PlusXi1,
                                   BellSlot second = BellSlot::PlusXi2) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("lambda2 r must lie in [0, 1]");
  if (first == second) throw DomainError("lambda2 slots must differ");
  std::array<double, 4> w{};
  w[static_cast<std::size_t>(first)] = r;
  w[static_cast<std::size_t>(second)] = 1.0 - r;
  return bell_diagonal_state(bell_basis(b), w);
}

struct GibbsParams {
  double lambda;
  double mu;  // (ξ₁+ξ₂)/2
  double nu;  // (ξ₁−ξ₂)/2
  double z;   // 4 cosh(λμ) cosh(λν)
};

// ln cosh x without overflow.
inline double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

inline constexpr double kGibbsOverflowGuard = 700.0;
inline constexpr double kGibbsShiftThreshold = 30.0;

/// ρ = exp(λB)/Z(λ), assembled from the Bell basis. When |λ|ξ₁ > 30 the
/// weights are computed as e^{λ(ξ_k − ξ₁)} (shifted by the largest
/// exponent) before normalizing.
inline std::pair<DensityMatrix, GibbsParams> gibbs_state(double lambda,
                                                         const BellOperator& b) {
  const double xi1 = b.xi1();
  const double xi2 = b.xi2();
  if (!std::isfinite(lambda) || std::abs(lambda) * xi1 > kGibbsOverflowGuard) {
    throw DomainError("|lambda|*xi1 exceeds the overflow guard");
  }
  const std::array<double, 4> spec = b.spectrum();
  std::array<double, 4> w;
  const double shift =
      std::abs(lambda) * xi1 > kGibbsShiftThreshold ? std::abs(lambda) * xi1 : 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = std::exp(lambda * spec[k] - shift);
    total += w[k];
  }
  for (double& x : w) x /= total;

  const double mu = 0.5 * (xi1 + xi2);
  const double nu = 0.5 * (xi1 - xi2);
  GibbsParams params{lambda, mu, nu, 4.0 * std::cosh(lambda * mu) * std::cosh(lambda * nu)};
  return {bell_diagonal_state(bell_basis(b), w), params};
}

struct CurvePoint {
  double beta;
  double entropy;
  double lambda;
};

/// Analytic thermal curve for a Bell operator with the given ξ₁:
///   β   = μ tanh(λμ) + ν tanh(λν)
///   S₁₂ = 2 ln 2 + ln cosh(λμ) + ln cosh(λν) − λβ
/// with ξ₂ = √(8 − ξ₁²).
inline std::vector<CurvePoint> gibbs_curve(double xi1, const std::vector<double>& lambdas) {
  if (!(xi1 >= 2.0 - 1e-12 && xi1 <= kTsirelson + 1e-12)) {
    throw DomainError("xi1 must lie in [2, 2*sqrt(2)]");
  }
  const double xi2 = std::sqrt(std::max(0.0, 8.0 - xi1 * xi1));
  const double mu = 0.5 * (xi1 + xi2);
  const double nu = 0.5 * (xi1 - xi2);
  std::vector<CurvePoint> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) {
    if (!std::isfinite(l)) throw DomainError("lambda grid must be finite");
    const double b = mu * std::tanh(l * mu) + nu * std::tanh(l * nu);
    const double s = 2.0 * kLn2 + log_cosh(l * mu) + log_cosh(l * nu) - l * b;
    out.push_back({b, std::max(0.0, s), l});
  }
  return out;
}

/// ρ′ = ρ − ½ I⊗ρ₂ − ½ ρ₁⊗I + ½ I. Hermitian with unit trace; not
/// necessarily positive, so it is returned as a plain matrix.
inline Matrix4 rho_prime(const DensityMatrix& rho) {
  const Matrix4& m = rho.matrix();
  const Matrix2 id = Matrix2::identity();
  const Matrix2 r1 = partial_trace(m, Subsystem::First);
  const Matrix2 r2 = partial_trace(m, Subsystem::Second);
  return m - 0.5 * kron(id, r2) - 0.5 * kron(r1, id) + 0.5 * Matrix4::identity();
}

}  // namespace bea
