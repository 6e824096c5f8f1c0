// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file    matrix.hpp
 * @brief   Dense row-major real matrix, vector helpers, tolerance-based
 *          predicates.
 *
 * Every predicate in the library compares a Frobenius-norm residual with a
 * relative threshold `abs_tol * max(1, scale)`; raw float equality is never
 * used to decide a property.
 */

#ifndef REALQM_MATRIX_HPP_
#define REALQM_MATRIX_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realqm/errors.hpp"

namespace realqm {

using Vector = std::vector<double>;

/// Thresholds shared by predicates and spectral clustering.
struct Tolerance {
  double abs_tol = 1e-10;
  double spectral_gap_tol = 1e-8;

  void validate() const {
    if (!(abs_tol >= 0.0) || !(spectral_gap_tol >= 0.0))
      throw DomainError("tolerance: abs_tol and spectral_gap_tol must be nonnegative");
    if (spectral_gap_tol < abs_tol)
      throw DomainError("tolerance: spectral_gap_tol must be >= abs_tol");
  }
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zeros(std::size_t n) { return Matrix(n, n); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Builds from nested row lists; all rows must have equal length.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("from_rows: ragged row list");
      std::size_t j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  /// Square matrix from a flat row-major array of length dim*dim.
  static Matrix from_flat(std::size_t dim, std::span<const double> flat) {
    if (flat.size() != dim * dim)
      throw DimensionError("from_flat: expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(flat.size()));
    Matrix m(dim, dim);
    std::copy(flat.begin(), flat.end(), m.data_.begin());
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("from_columns: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Side length of a square matrix.
  std::size_t dim() const {
    if (!is_square()) throw DimensionError("dim: matrix is not square");
    return rows_;
  }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<double> flat() noexcept { return data_; }
  std::span<const double> flat() const noexcept { return data_; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(double s) noexcept {
    for (double& v : data_) v *= s;
    return *this;
  }
  Matrix& operator/=(double s) noexcept {
    for (double& v : data_) v /= s;
    return *this;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  void require_same_shape(const Matrix& o, const char* where) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string(where) + ": shape mismatch " + shape_string() + " vs " +
                           o.shape_string());
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
inline Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
inline Matrix operator-(Matrix a) { return a *= -1.0; }
inline Matrix operator*(Matrix a, double s) { return a *= s; }
inline Matrix operator*(double s, Matrix a) { return a *= s; }
inline Matrix operator/(Matrix a, double s) { return a /= s; }

/// Matrix product. i-k-j loop order keeps the inner loop contiguous.
inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + a.shape_string() + " times " + b.shape_string());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// Square-only product, the kernel `matmul` contract.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("matmul: dimension mismatch " + a.shape_string() + " vs " +
                         b.shape_string());
  return a * b;
}

inline Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matvec: dimension mismatch");
  Vector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

inline double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

/// v w^T
inline Matrix outer(const Vector& v, const Vector& w) {
  Matrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * w[j];
  return m;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.flat()) s += v * v;
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.flat()) m = std::max(m, std::abs(v));
  return m;
}

inline double trace(const Matrix& a) {
  const std::size_t n = a.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a(i, i);
  return s;
}

/// Tr(a b) without forming the product.
inline double trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionError("trace_of_product: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  return s;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return matmul(a, b) - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return matmul(a, b) + b * a; }

inline double distance(const Matrix& a, const Matrix& b) {
  a.require_same_shape(b, "distance");
  return frobenius_norm(a - b);
}

// Residuals behind the predicates. Each is a Frobenius norm.

inline double symmetry_residual(const Matrix& a) { return frobenius_norm(a - a.transpose()); }
inline double antisymmetry_residual(const Matrix& a) { return frobenius_norm(a + a.transpose()); }
inline double commutator_residual(const Matrix& a, const Matrix& b) {
  return frobenius_norm(commutator(a, b));
}
inline double anticommutator_residual(const Matrix& a, const Matrix& b) {
  return frobenius_norm(anticommutator(a, b));
}
inline double orthogonality_residual(const Matrix& a) {
  return frobenius_norm(a.transpose() * a - Matrix::identity(a.dim()));
}
/// ||A^T J A - J||
inline double symplecticity_residual(const Matrix& a, const Matrix& j) {
  return frobenius_norm(a.transpose() * j * a - j);
}

namespace detail {
inline bool within(double residual, const Tolerance& tol, double scale) {
  return residual <= tol.abs_tol * std::max(1.0, scale);
}
inline void require_square(const Matrix& a, const char* where) {
  if (!a.is_square()) throw DimensionError(std::string(where) + ": matrix is not square");
}
inline void require_same_dim(const Matrix& a, const Matrix& b, const char* where) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError(std::string(where) + ": dimension mismatch " + a.shape_string() + " vs " +
                         b.shape_string());
}
}  // namespace detail

inline bool is_symmetric(const Matrix& a, const Tolerance& tol = {}) {
  detail::require_square(a, "is_symmetric");
  return detail::within(symmetry_residual(a), tol, frobenius_norm(a));
}

inline bool is_antisymmetric(const Matrix& a, const Tolerance& tol = {}) {
  detail::require_square(a, "is_antisymmetric");
  return detail::within(antisymmetry_residual(a), tol, frobenius_norm(a));
}

inline bool commutes(const Matrix& a, const Matrix& b, const Tolerance& tol = {}) {
  detail::require_same_dim(a, b, "commutes");
  return detail::within(commutator_residual(a, b), tol, frobenius_norm(a) * frobenius_norm(b));
}

inline bool anticommutes(const Matrix& a, const Matrix& b, const Tolerance& tol = {}) {
  detail::require_same_dim(a, b, "anticommutes");
  return detail::within(anticommutator_residual(a, b), tol,
                        frobenius_norm(a) * frobenius_norm(b));
}

inline bool is_orthogonal(const Matrix& a, const Tolerance& tol = {}) {
  detail::require_square(a, "is_orthogonal");
  return detail::within(orthogonality_residual(a), tol, 1.0);
}

/// A^T J A = J, scaled by ||A||_F^2 since the residual is quadratic in A.
inline bool is_symplectic(const Matrix& a, const Matrix& j, const Tolerance& tol = {}) {
  detail::require_same_dim(a, j, "is_symplectic");
  const double na = frobenius_norm(a);
  return detail::within(symplecticity_residual(a, j), tol, na * na);
}

inline bool approx_equal(const Matrix& a, const Matrix& b, const Tolerance& tol = {}) {
  a.require_same_shape(b, "approx_equal");
  return detail::within(frobenius_norm(a - b), tol, std::max(frobenius_norm(a), frobenius_norm(b)));
}

}  // namespace realqm

#endif  // REALQM_MATRIX_HPP_
