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

// CHSH Bell operators built from four measurement directions, their
// closed-form spectrum and eigenbasis, expectation values, maximization of
// the CHSH parameter over settings, and the translation to the
// Clauser-Horne probability form.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "bea/errors.hpp"
#include "bea/numkit.hpp"
#include "bea/rng.hpp"
#include "bea/states.hpp"

namespace bea {

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kTsirelson = 2.0 * std::numbers::sqrt2;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Unit vector n defining the ±1-valued qubit observable n·σ.
class BlochVector {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  // Throws DomainError unless ‖(x, y, z)‖ = 1 within 1e-12.
  static BlochVector unit(double x, double y, double z) {
    const double n = length({x, y, z});
    if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTolerance) {
      throw DomainError("Bloch vector is not a unit vector (norm " +
                        std::to_string(n) + ")");
    }
    return BlochVector({x, y, z});
  }

  // Rescales any nonzero vector onto the sphere.
  static BlochVector normalized(Vec3 v) {
    const double n = length(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw DomainError("cannot normalize a zero or non-finite vector");
    }
    return BlochVector((1.0 / n) * v);
  }

  static BlochVector random(Rng& rng) {
    for (;;) {
      const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
      if (length(v) > 1e-8) return normalized(v);
    }
  }

  Vec3 vec() const noexcept { return v_; }
  double x() const noexcept { return v_.x; }
  double y() const noexcept { return v_.y; }
  double z() const noexcept { return v_.z; }

  // n·σ
  Matrix2 observable() const {
    return v_.x * pauli::x() + v_.y * pauli::y() + v_.z * pauli::z();
  }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;

 private:
  explicit BlochVector(Vec3 v) : v_(v) {}
  Vec3 v_;
};

struct BellSettings {
  BlochVector a1, b1, a2, b2;

  static BellSettings random(Rng& rng) {
    BlochVector a1 = BlochVector::random(rng);
    BlochVector b1 = BlochVector::random(rng);
    BlochVector a2 = BlochVector::random(rng);
    BlochVector b2 = BlochVector::random(rng);
    return {a1, b1, a2, b2};
  }

  // a₁ = x̂, b₁ = ẑ, a₂ = (x̂+ẑ)/√2, b₂ = (x̂−ẑ)/√2: both cross products
  // have unit length, so ξ₁ = 2√2 and ξ₂ = 0.
  static BellSettings canonical() {
    const double h = 1.0 / kSqrt2;
    return {BlochVector::unit(1, 0, 0), BlochVector::unit(0, 0, 1),
            BlochVector::unit(h, 0, h), BlochVector::unit(h, 0, -h)};
  }
};

/// B = a₁⊗a₂ + a₁⊗b₂ + b₁⊗a₂ − b₁⊗b₂ together with the settings it was
/// built from and its two non-negative eigenvalues ξ₁ ≥ ξ₂ ≥ 0. The full
/// spectrum is {ξ₁, ξ₂, −ξ₂, −ξ₁} with ξ₁² + ξ₂² = 8.
class BellOperator {
 public:
  const BellSettings& settings() const noexcept { return settings_; }
  const Matrix4& matrix() const noexcept { return mat_; }
  double xi1() const noexcept { return xi1_; }
  double xi2() const noexcept { return xi2_; }

  // (ξ₁, ξ₂, −ξ₂, −ξ₁)
  std::array<double, 4> spectrum() const { return {xi1_, xi2_, -xi2_, -xi1_}; }

  friend BellOperator build_bell(const BellSettings& s);

 private:
  BellOperator(const BellSettings& s, const Matrix4& m, double xi1, double xi2)
      : settings_(s), mat_(m), xi1_(xi1), xi2_(xi2) {}

  BellSettings settings_;
  Matrix4 mat_;
  double xi1_;
  double xi2_;
};

/// ξ₁² = 4 + 4|a₁×b₁||a₂×b₂| and ξ₂² = 4 − 4|a₁×b₁||a₂×b₂|.
///
/// 1 − s₁s₂ is evaluated as (d₁² + d₂² − d₁²d₂²)/(1 + s₁s₂) with dᵢ = aᵢ·bᵢ,
/// so ξ₂ keeps full precision when both pairs are nearly orthogonal.
inline BellOperator build_bell(const BellSettings& s) {
  const Matrix2 a1 = s.a1.observable();
  const Matrix2 b1 = s.b1.observable();
  const Matrix2 a2 = s.a2.observable();
  const Matrix2 b2 = s.b2.observable();
  const Matrix4 m = kron(a1, a2) + kron(a1, b2) + kron(b1, a2) - kron(b1, b2);

  const double s1 = std::min(1.0, length(cross(s.a1.vec(), s.b1.vec())));
  const double s2 = std::min(1.0, length(cross(s.a2.vec(), s.b2.vec())));
  const double d1 = dot(s.a1.vec(), s.b1.vec());
  const double d2 = dot(s.a2.vec(), s.b2.vec());
  const double prod = s1 * s2;
  const double one_minus =
      std::max(0.0, (d1 * d1 + d2 * d2 - d1 * d1 * d2 * d2) / (1.0 + prod));
  const double xi1 = 2.0 * std::sqrt(1.0 + prod);
  const double xi2 = 2.0 * std::sqrt(one_minus);
  return BellOperator(s, m, xi1, xi2);
}

inline BellOperator build_bell(const BlochVector& a1, const BlochVector& b1,
                               const BlochVector& a2, const BlochVector& b2) {
  return build_bell(BellSettings{a1, b1, a2, b2});
}

// Positions in a BellBasis, by signed eigenvalue.
enum class BellSlot : std::size_t { PlusXi1 = 0, PlusXi2 = 1, MinusXi2 = 2, MinusXi1 = 3 };

/// Eigenvectors of B ordered (ξ₁, ξ₂, −ξ₂, −ξ₁).
struct BellBasis {
  std::array<Vector4, 4> vectors{};
  std::array<double, 4> values{};

  const Vector4& at(BellSlot slot) const {
    return vectors[static_cast<std::size_t>(slot)];
  }
};

inline constexpr double kDegeneracyTolerance = 1e-10;

/// Bell eigenbasis with deterministic vectors.
///
/// Eigenvalues closer than 1e-10 form one eigenspace. Each eigenspace basis
/// is rebuilt by Gram-Schmidt on its projector applied to e₁..e₄ in index
/// order, so the result depends on B only (not on Jacobi rotation order),
/// and non-degenerate vectors get a fixed phase.
inline BellBasis bell_basis(const BellOperator& b) {
  const EigenDecomposition<4> eig = hermitian_eigen(b.matrix());
  std::array<double, 4> desc;
  std::array<Vector4, 4> vecs;
  for (std::size_t k = 0; k < 4; ++k) {
    desc[k] = eig.values[3 - k];
    vecs[k] = eig.vector(3 - k);
  }

  BellBasis basis;
  basis.values = b.spectrum();
  std::size_t start = 0;
  while (start < 4) {
    std::size_t end = start + 1;
    while (end < 4 && desc[end - 1] - desc[end] <= kDegeneracyTolerance) ++end;

    Matrix4 projector;
    for (std::size_t k = start; k < end; ++k) projector += outer(vecs[k], vecs[k]);

    std::size_t filled = start;
    for (std::size_t j = 0; j < 4 && filled < end; ++j) {
      Vector4 w = column(projector, j);  // P e_j (P Hermitian)
      for (std::size_t k = start; k < filled; ++k) {
        const Complex c = inner(basis.vectors[k], w);
        for (std::size_t i = 0; i < 4; ++i) w[i] -= c * basis.vectors[k][i];
      }
      const double n = norm(w);
      if (n > 1e-6) {
        for (auto& z : w) z /= n;
        basis.vectors[filled++] = w;
      }
    }
    // Unreachable in exact arithmetic; keep the solver's vectors if it happens.
    for (; filled < end; ++filled) basis.vectors[filled] = vecs[filled];
    start = end;
  }
  return basis;
}

/// β = Tr(ρB).
inline double beta(const DensityMatrix& rho, const BellOperator& b) {
  return trace_of_product(rho.matrix(), b.matrix()).real();
}

/// T_ij = Tr(ρ σ_i⊗σ_j). For any settings, β = a₁ᵀT(a₂+b₂) + b₁ᵀT(a₂−b₂).
inline std::array<Vec3, 3> correlation_matrix(const Matrix4& rho) {
  const std::array<Matrix2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  std::array<std::array<double, 3>, 3> t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      t[i][j] = trace_of_product(rho, kron(sigma[i], sigma[j])).real();
  return {Vec3{t[0][0], t[0][1], t[0][2]}, Vec3{t[1][0], t[1][1], t[1][2]},
          Vec3{t[2][0], t[2][1], t[2][2]}};
}

struct BetaMaximum {
  double beta;
  BellOperator op;
};

inline constexpr int kDefaultRestarts = 32;

namespace detail {

using Rows3 = std::array<Vec3, 3>;

inline Vec3 apply(const Rows3& t, Vec3 v) {
  return {dot(t[0], v), dot(t[1], v), dot(t[2], v)};
}
inline Vec3 apply_transpose(const Rows3& t, Vec3 v) {
  return v.x * t[0] + v.y * t[1] + v.z * t[2];
}

inline double chsh_value(const Rows3& t, Vec3 a1, Vec3 b1, Vec3 a2, Vec3 b2) {
  return dot(a1, apply(t, a2 + b2)) + dot(b1, apply(t, a2 - b2));
}

// Coefficient direction, or the previous vector when it vanishes.
inline Vec3 ascend(Vec3 coefficient, Vec3 previous) {
  const double n = length(coefficient);
  return n > 1e-14 ? (1.0 / n) * coefficient : previous;
}

}  // namespace detail

/// Largest β over all Bell operators for a fixed state.
///
/// β is linear in each of the four Bloch vectors when the other three are
/// held fixed, so coordinate ascent sets each in turn to its normalized
/// coefficient direction until β improves by less than 1e-12. The best of
/// `restarts` random starts is returned; restart k draws from
/// derive_seed(seed, k).
inline BetaMaximum maximize_beta(const DensityMatrix& rho,
                                 int restarts = kDefaultRestarts,
                                 std::uint64_t seed = 0) {
  if (restarts < 1) throw DomainError("maximize_beta needs at least one restart");
  constexpr int kMaxIterations = 10000;
  const detail::Rows3 t = correlation_matrix(rho.matrix());

  double best = -std::numeric_limits<double>::infinity();
  BellSettings best_settings = BellSettings::canonical();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    Vec3 a1 = BlochVector::random(rng).vec();
    Vec3 b1 = BlochVector::random(rng).vec();
    Vec3 a2 = BlochVector::random(rng).vec();
    Vec3 b2 = BlochVector::random(rng).vec();
    double value = detail::chsh_value(t, a1, b1, a2, b2);
    for (int it = 0; it < kMaxIterations; ++it) {
      a1 = detail::ascend(detail::apply(t, a2 + b2), a1);
      b1 = detail::ascend(detail::apply(t, a2 - b2), b1);
      a2 = detail::ascend(detail::apply_transpose(t, a1 + b1), a2);
      b2 = detail::ascend(detail::apply_transpose(t, a1 - b1), b2);
      const double next = detail::chsh_value(t, a1, b1, a2, b2);
      const bool done = next - value < 1e-12;
      value = std::max(value, next);
      if (done) break;
    }
    if (value > best) {
      best = value;
      best_settings = {BlochVector::normalized(a1), BlochVector::normalized(b1),
                       BlochVector::normalized(a2), BlochVector::normalized(b2)};
    }
  }
  BellOperator op = build_bell(best_settings);
  return {beta(rho, op), op};
}

/// 0/1-valued observables of the Clauser-Horne form, given as projectors.
struct ChObservables {
  Matrix2 a1, b1, a2, b2;
};

// (I + n·σ)/2
inline Matrix2 projector_along(const BlochVector& n) {
  return 0.5 * (Matrix2::identity() + n.observable());
}

struct ChTranslation {
  double chsh_beta;  // β of the dichotomic observables 2A − I
  double ch_left;    // p(A₁) + p(A₂)
  double ch_right;   // p(A₁A₂) + p(A₁B₂) + p(B₁A₂) − p(B₁B₂)
};

inline constexpr double kProjectorTolerance = 1e-10;

inline void require_projector(const Matrix2& p, const char* name) {
  if (!p.all_finite() || hermiticity_defect(p) > kProjectorTolerance ||
      frobenius_distance(p * p, p) > kProjectorTolerance) {
    throw DomainError(std::string("CH observable ") + name + " is not a projector");
  }
}

/// Probabilities of the CH inequality and the CHSH parameter of the
/// matching dichotomic observables aⱼ = 2Aⱼ − 1. They satisfy
/// β = 4(chRight − chLeft) + 2, so β ≤ 2 exactly when chRight ≤ chLeft.
inline ChTranslation ch_translate(const DensityMatrix& rho, const ChObservables& ch) {
  require_projector(ch.a1, "A1");
  require_projector(ch.b1, "B1");
  require_projector(ch.a2, "A2");
  require_projector(ch.b2, "B2");
  const Matrix4& r = rho.matrix();
  const Matrix2 id = Matrix2::identity();
  auto p = [&](const Matrix2& x, const Matrix2& y) {
    return trace_of_product(r, kron(x, y)).real();
  };
  const double left = p(ch.a1, id) + p(id, ch.a2);
  const double right = p(ch.a1, ch.a2) + p(ch.a1, ch.b2) + p(ch.b1, ch.a2) - p(ch.b1, ch.b2);

  const Matrix2 a1 = 2.0 * ch.a1 - id;
  const Matrix2 b1 = 2.0 * ch.b1 - id;
  const Matrix2 a2 = 2.0 * ch.a2 - id;
  const Matrix2 b2 = 2.0 * ch.b2 - id;
  const Matrix4 bell = kron(a1, a2) + kron(a1, b2) + kron(b1, a2) - kron(b1, b2);
  return {trace_of_product(r, bell).real(), left, right};
}

}  // namespace bea
