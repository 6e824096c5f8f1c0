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
 * @file    decompositions.hpp
 * @brief   Symmetric eigendecomposition (cyclic Jacobi), singular values
 *          (one-sided Jacobi), numerical rank, LU solve and Gram-Schmidt.
 */

#ifndef REALQM_DECOMPOSITIONS_HPP_
#define REALQM_DECOMPOSITIONS_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "realqm/matrix.hpp"

namespace realqm {

struct SymmetricEigen {
  Vector values;   ///< ascending
  Matrix vectors;  ///< column k belongs to values[k]
};

namespace detail {

// Applies the plane rotation [[c, s], [-s, c]] to columns p, q of m.
inline void rotate_columns(Matrix& m, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const double mkp = m(k, p);
    const double mkq = m(k, q);
    m(k, p) = c * mkp - s * mkq;
    m(k, q) = s * mkp + c * mkq;
  }
}

inline void rotate_rows(Matrix& m, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const double mpk = m(p, k);
    const double mqk = m(q, k);
    m(p, k) = c * mpk - s * mqk;
    m(q, k) = s * mpk + c * mqk;
  }
}

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace detail

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// The accumulated rotation product is orthogonal to rounding, which is what
/// the projector constructions downstream rely on. Eigenvalues are returned
/// ascending; equal values keep the order of their diagonal slots after the
/// final sweep (stable sort).
inline SymmetricEigen sym_eig(const Matrix& input, const Tolerance& tol = {}) {
  detail::require_square(input, "sym_eig");
  if (!input.all_finite()) throw DomainError("sym_eig: non-finite entries");
  if (!is_symmetric(input, tol)) throw DomainError("sym_eig: input is not symmetric");

  const std::size_t n = input.rows();
  Matrix a = (input + input.transpose()) * 0.5;
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double eps = std::numeric_limits<double>::epsilon();
  const double target = eps * scale;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Negligible next to both diagonal entries: annihilate without rotating.
        if (sweep > 3 && std::abs(apq) <= 0.5 * eps * std::min(std::abs(a(p, p)), std::abs(a(q, q)))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        detail::rotate_columns(a, p, q, c, s);
        detail::rotate_rows(a, p, q, c, s);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        detail::rotate_columns(v, p, q, c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Singular values (descending) by one-sided Jacobi orthogonalization of the
/// columns. Works directly on the matrix, so tiny singular values are not
/// squared away as they would be through a Gram matrix eigensolve.
inline Vector singular_values(const Matrix& input) {
  Matrix u = input.rows() >= input.cols() ? input : input.transpose();
  const std::size_t n = u.cols();
  const double eps = std::numeric_limits<double>::epsilon();

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < u.rows(); ++k) {
          alpha += u(k, p) * u(k, p);
          beta += u(k, q) * u(k, q);
          gamma += u(k, p) * u(k, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        detail::rotate_columns(u, p, q, c, s);
      }
    }
    if (!rotated) break;
  }

  Vector sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = norm2(u.column(j));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

/// Number of singular values above `threshold * max(1, largest)`.
inline std::size_t numerical_rank(const Matrix& a, double threshold = 1e-8) {
  const Vector sv = singular_values(a);
  if (sv.empty()) return 0;
  const double cut = threshold * std::max(1.0, sv.front());
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

/// Rank of the span of a family of equally shaped matrices, each flattened
/// to a column.
inline std::size_t span_rank(const std::vector<Matrix>& family, double threshold = 1e-8) {
  if (family.empty()) return 0;
  const std::size_t len = family.front().flat().size();
  Matrix stacked(len, family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].flat().size() != len) throw DimensionError("span_rank: mixed shapes");
    for (std::size_t i = 0; i < len; ++i) stacked(i, j) = family[j].flat()[i];
  }
  return numerical_rank(stacked, threshold);
}

/// Solves A X = B by LU with partial pivoting.
inline Matrix solve(const Matrix& a, const Matrix& b) {
  detail::require_square(a, "solve");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows();
  Matrix lu = a;
  Matrix x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) throw DomainError("solve: matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double s = x(kk, j);
      for (std::size_t i = kk + 1; i < n; ++i) s -= lu(kk, i) * x(i, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

/// Modified Gram-Schmidt with one reorthogonalization pass. Candidates whose
/// residual norm after projection falls below `drop_tol` are skipped.
inline std::vector<Vector> orthonormalize(const std::vector<Vector>& candidates,
                                          double drop_tol = 1e-8) {
  std::vector<Vector> basis;
  for (Vector w : candidates) {
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& b : basis) {
        const double c = dot(b, w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
      }
    const double nrm = norm2(w);
    if (nrm < drop_tol) continue;
    for (double& x : w) x /= nrm;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace realqm

#endif  // REALQM_DECOMPOSITIONS_HPP_
