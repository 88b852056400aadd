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

// Linear and von Neumann entropies of a two-qubit state and its marginals,
// with the conditional entropies S_{i/j} = S₁₂ − S_j.

#include <cmath>
#include <numbers>
#include <span>
#include <utility>

#include "bea/numkit.hpp"
#include "bea/states.hpp"

namespace bea {

enum class EntropyKind { Linear, VonNeumann };

struct EntropyReport {
  EntropyKind kind;
  double s12;
  double s1;
  double s2;
  double cond21;   // S₁₂ − S₁
  double cond12;   // S₁₂ − S₂
  double cond_sum; // cond21 + cond12

  static EntropyReport from_parts(EntropyKind kind, double s12, double s1, double s2) {
    const double c21 = s12 - s1;
    const double c12 = s12 - s2;
    return {kind, s12, s1, s2, c21, c12, c21 + c12};
  }
};

inline constexpr double kEigenvalueClamp = 1e-12;
inline constexpr double kLn2 = std::numbers::ln2;

// x ln x with 0 ln 0 = 0.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// −Σ λ ln λ, eigenvalues below 1e-12 contribute nothing. Nats.
inline double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p >= kEigenvalueClamp) s -= p * std::log(p);
  return s;
}

template <std::size_t N>
double von_neumann_of(const Matrix<N>& rho) {
  return shannon_entropy(hermitian_eigen(rho).values);
}

// 1 − Tr(ρ²)
template <std::size_t N>
double linear_of(const Matrix<N>& rho) {
  return 1.0 - trace_of_product(rho, rho).real();
}

inline EntropyReport linear_entropy(const DensityMatrix& rho) {
  const Matrix4& m = rho.matrix();
  return EntropyReport::from_parts(EntropyKind::Linear, linear_of(m),
                                   linear_of(partial_trace(m, Subsystem::First)),
                                   linear_of(partial_trace(m, Subsystem::Second)));
}

inline EntropyReport von_neumann_entropy(const DensityMatrix& rho) {
  const Matrix4& m = rho.matrix();
  return EntropyReport::from_parts(EntropyKind::VonNeumann, von_neumann_of(m),
                                   von_neumann_of(partial_trace(m, Subsystem::First)),
                                   von_neumann_of(partial_trace(m, Subsystem::Second)));
}

inline constexpr double kInequalityTolerance = 1e-12;

// (S₁₂ ≥ S₁, S₁₂ ≥ S₂); a flag turns false only past 1e-12.
inline std::pair<bool, bool> entropy_inequality_check(const EntropyReport& r) {
  return {r.s12 >= r.s1 - kInequalityTolerance, r.s12 >= r.s2 - kInequalityTolerance};
}

inline double nats_to_bits(double nats) { return nats / kLn2; }

}  // namespace bea
