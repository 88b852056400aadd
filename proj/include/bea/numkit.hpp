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

// Dense complex linear algebra for the fixed 2x2 and 4x4 sizes used by
// two-qubit states: products, traces, Kronecker products, and a cyclic
// Jacobi eigensolver for Hermitian matrices.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>

#include "bea/errors.hpp"

namespace bea {

using Complex = std::complex<double>;

template <std::size_t N>
using Vector = std::array<Complex, N>;

using Vector2 = Vector<2>;
using Vector4 = Vector<4>;

/// Square complex matrix stored row-major.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are supported");

 public:
  static constexpr std::size_t kDim = N;

  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  // Throws DimensionError unless exactly N*N entries are supplied.
  static Matrix from_row_major(std::span<const Complex> entries) {
    if (entries.size() != N * N) {
      throw DimensionError("expected " + std::to_string(N * N) +
                           " entries, got " + std::to_string(entries.size()));
    }
    Matrix m;
    std::copy(entries.begin(), entries.end(), m.data_.begin());
    return m;
  }

  constexpr std::size_t dim() const noexcept { return N; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * N + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  std::span<const Complex, N * N> entries() const noexcept { return data_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= Complex(s); }
  friend Matrix operator*(double s, Matrix a) { return a *= Complex(s); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> w{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) w[i] += a(i, j) * v[j];
    return w;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

// Tr(a b) without forming the product.
template <std::size_t N>
Complex trace_of_product(const Matrix<N>& a, const Matrix<N>& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) t += a(i, k) * b(k, i);
  return t;
}

template <std::size_t N>
double frobenius_distance(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).frobenius_norm();
}

// ‖h − h†‖_F
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& h) {
  return frobenius_distance(h, h.adjoint());
}

template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& h) {
  return 0.5 * (h + h.adjoint());
}

template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

// |a⟩⟨b|
template <std::size_t N>
Matrix<N> outer(const Vector<N>& a, const Vector<N>& b) {
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

template <std::size_t N>
Vector<N> column(const Matrix<N>& m, std::size_t c) {
  Vector<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = m(i, c);
  return v;
}

/// Kronecker product, subsystem 1 ⊗ subsystem 2. A two-qubit basis index is
/// 2·i₁ + i₂.
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          m(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return m;
}

inline Vector4 kron(const Vector2& a, const Vector2& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

namespace pauli {

inline Matrix2 identity() { return Matrix2::identity(); }

inline Matrix2 x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Matrix2 y() {
  Matrix2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

inline Matrix2 z() { return Matrix2::diagonal({1.0, -1.0}); }

}  // namespace pauli

/// Eigenvalues in ascending order; eigenvectors are the matching columns of
/// `vectors`.
template <std::size_t N>
struct EigenDecomposition {
  std::array<double, N> values{};
  Matrix<N> vectors;

  Vector<N> vector(std::size_t k) const { return column(vectors, k); }

  Matrix<N> reconstruct() const {
    Matrix<N> m;
    for (std::size_t k = 0; k < N; ++k) {
      const Vector<N> v = vector(k);
      m += values[k] * outer(v, v);
    }
    return m;
  }
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace detail

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Each rotation acts in the (p, q) plane as
///   R = [[c, s·e], [−s·ē, c]],  e = a_pq/|a_pq|,
/// with the real Jacobi angle computed from |a_pq|. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12; more than 100 sweeps is
/// reported as ConvergenceError. A degenerate eigenspace comes back in
/// whatever orthonormal basis the rotations produce.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const Matrix<N>& h) {
  if (!h.all_finite()) throw DomainError("matrix has non-finite entries");
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance) {
    throw NotHermitianError("matrix is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }

  Matrix<N> a = hermitian_part(h);
  Matrix<N> v = Matrix<N>::identity();

  int sweep = 0;
  while (detail::off_diagonal_norm(a) >= kJacobiThreshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex e = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex se = s * e;
        const Complex se_conj = std::conj(se);

        // a <- a R, v <- v R (columns p, q)
        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - se_conj * akq;
          a(k, q) = se * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - se_conj * vkq;
          v(k, q) = se * vkp + c * vkq;
        }
        // a <- R† a (rows p, q)
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - se * aqk;
          a(q, k) = se_conj * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// V·diag(f(λᵢ))·V† for Hermitian h. Throws DomainError if f yields a
/// non-finite value on any eigenvalue.
template <std::size_t N, typename F>
Matrix<N> matrix_function(const Matrix<N>& h, F&& f) {
  const EigenDecomposition<N> eig = hermitian_eigen(h);
  Matrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double fk = f(eig.values[k]);
    if (!std::isfinite(fk)) {
      throw DomainError("matrix function undefined at eigenvalue " +
                        std::to_string(eig.values[k]));
    }
    const Vector<N> vk = eig.vector(k);
    out += fk * outer(vk, vk);
  }
  return out;
}

template <std::size_t N>
Matrix<N> matrix_exp(const Matrix<N>& h) {
  return matrix_function(h, [](double x) { return std::exp(x); });
}

// Logarithm of a positive definite matrix. Any eigenvalue at or below
// `clamp` makes the logarithm undefined and raises DomainError.
template <std::size_t N>
Matrix<N> matrix_log(const Matrix<N>& h, double clamp = 1e-12) {
  return matrix_function(h, [clamp](double x) {
    if (x <= clamp) return std::numeric_limits<double>::quiet_NaN();
    return std::log(x);
  });
}

}  // namespace bea
