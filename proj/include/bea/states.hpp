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

// Two-qubit density matrices: validation, partial traces, and Ginibre
// sampling of general and separable states.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bea/errors.hpp"
#include "bea/numkit.hpp"
#include "bea/rng.hpp"

namespace bea {

inline constexpr double kStateTolerance = 1e-10;

enum class Subsystem { First = 1, Second = 2 };

/// Validated two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  const Matrix4& matrix() const noexcept { return mat_; }

  friend DensityMatrix validate_density(const Matrix4& m);

 private:
  explicit DensityMatrix(const Matrix4& m) : mat_(m) {}
  Matrix4 mat_;
};

/// Validated single-qubit state.
class ReducedDensity {
 public:
  const Matrix2& matrix() const noexcept { return mat_; }

  friend ReducedDensity validate_reduced(const Matrix2& m);

 private:
  explicit ReducedDensity(const Matrix2& m) : mat_(m) {}
  Matrix2 mat_;
};

namespace detail {

// Shared validation: Hermitian, unit trace, spectrum ≥ −tol. Marginally
// negative eigenvalues are clamped to zero and the trace restored.
template <std::size_t N>
Matrix<N> validated_state_matrix(const Matrix<N>& m, double max_eigenvalue) {
  if (!m.all_finite()) throw InvalidStateError("state has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kStateTolerance) {
    throw InvalidStateError("state is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kStateTolerance ||
      std::abs(tr.imag()) > kStateTolerance) {
    throw InvalidStateError("state trace is " + std::to_string(tr.real()) +
                            ", expected 1");
  }
  EigenDecomposition<N> eig = hermitian_eigen(m);
  if (eig.values.front() < -kStateTolerance) {
    throw InvalidStateError("state has negative eigenvalue " +
                            std::to_string(eig.values.front()));
  }
  if (eig.values.back() > max_eigenvalue + kStateTolerance) {
    throw InvalidStateError("state has eigenvalue above " +
                            std::to_string(max_eigenvalue));
  }
  if (eig.values.front() >= 0.0) return hermitian_part(m);

  double total = 0.0;
  for (double& v : eig.values) {
    v = std::max(v, 0.0);
    total += v;
  }
  for (double& v : eig.values) v /= total;
  return hermitian_part(eig.reconstruct());
}

}  // namespace detail

/// Accepts a candidate 4x4 matrix as a state or throws InvalidStateError.
inline DensityMatrix validate_density(const Matrix4& m) {
  return DensityMatrix(detail::validated_state_matrix(m, 1.0));
}

inline ReducedDensity validate_reduced(const Matrix2& m) {
  return ReducedDensity(detail::validated_state_matrix(m, 1.0));
}

/// Partial trace of an arbitrary 4x4 operator, keeping `keep`.
inline Matrix2 partial_trace(const Matrix4& m, Subsystem keep) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Subsystem::First)
          r(i, j) += m(2 * i + k, 2 * j + k);
        else
          r(i, j) += m(2 * k + i, 2 * k + j);
      }
  return r;
}

inline ReducedDensity partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return validate_reduced(partial_trace(rho.matrix(), keep));
}

inline DensityMatrix product_state(const ReducedDensity& a,
                                   const ReducedDensity& b) {
  return validate_density(kron(a.matrix(), b.matrix()));
}

inline DensityMatrix pure_state(const Vector4& psi) {
  const double n = norm(psi);
  if (!(n > 0.0)) throw InvalidStateError("zero state vector");
  Vector4 u = psi;
  for (auto& z : u) z /= n;
  return validate_density(outer(u, u));
}

inline DensityMatrix maximally_mixed() {
  return validate_density(0.25 * Matrix4::identity());
}

// Singlet (|01⟩ − |10⟩)/√2.
inline DensityMatrix singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  return pure_state({0.0, h, -h, 0.0});
}

// w·a + (1 − w)·b, w ∈ [0, 1].
inline DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b,
                         double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mixing weight outside [0, 1]");
  return validate_density(w * a.matrix() + (1.0 - w) * b.matrix());
}

namespace detail {

template <std::size_t N>
Matrix<N> ginibre_state_matrix(Rng& rng, int rank) {
  // G is N x rank; G G† / Tr(G G†).
  Matrix<N> gg;
  std::array<Vector<N>, N> cols{};
  for (int c = 0; c < rank; ++c)
    for (std::size_t i = 0; i < N; ++i) cols[c][i] = rng.complex_normal();
  for (int c = 0; c < rank; ++c) gg += outer(cols[c], cols[c]);
  const double tr = gg.trace().real();
  return (1.0 / tr) * gg;
}

}  // namespace detail

inline constexpr int kDefaultSeparableTerms = 4;

/// Ginibre-distributed state of rank ≤ `rank` (1..4).
inline DensityMatrix sample_density(Rng& rng, int rank) {
  if (rank < 1 || rank > 4) {
    throw DomainError("rank must be in 1..4, got " + std::to_string(rank));
  }
  return validate_density(detail::ginibre_state_matrix<4>(rng, rank));
}

/// Ginibre-distributed qubit state of rank 1 (pure) or 2.
inline ReducedDensity sample_qubit(Rng& rng, int rank = 2) {
  if (rank < 1 || rank > 2) {
    throw DomainError("qubit rank must be 1 or 2, got " + std::to_string(rank));
  }
  return validate_reduced(detail::ginibre_state_matrix<2>(rng, rank));
}

struct SeparableSample {
  std::vector<double> weights;
  std::vector<std::pair<ReducedDensity, ReducedDensity>> factors;
};

/// Random convex combination of `terms` product states. Weights are
/// flat-Dirichlet; each factor is a Ginibre qubit of rank `factor_rank`.
inline std::pair<SeparableSample, DensityMatrix> sample_separable(
    Rng& rng, int terms = kDefaultSeparableTerms, int factor_rank = 2) {
  if (terms < 1) throw DomainError("separable sample needs at least one term");
  SeparableSample sample;
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    double w = 0.0;
    while (!(w > 0.0)) w = -std::log(1.0 - rng.uniform());
    sample.weights.push_back(w);
    total += w;
  }
  Matrix4 rho;
  for (int k = 0; k < terms; ++k) {
    sample.weights[k] /= total;
    ReducedDensity a = sample_qubit(rng, factor_rank);
    ReducedDensity b = sample_qubit(rng, factor_rank);
    rho += sample.weights[k] * kron(a.matrix(), b.matrix());
    sample.factors.emplace_back(std::move(a), std::move(b));
  }
  // Normalization absorbs the rounding in Σw.
  rho = (1.0 / rho.trace().real()) * rho;
  return {std::move(sample), validate_density(rho)};
}

}  // namespace bea
