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
 * @file    realification.hpp
 * @brief   Dictionary between C^D and R^{2D}.
 *
 * Coordinates are interleaved: the complex vector (z_1, ..., z_D) becomes
 * (Re z_1, Im z_1, Re z_2, Im z_2, ...). In this layout multiplication by i
 * is the block-diagonal matrix J with blocks [[0, -1], [1, 0]], and a complex
 * entry a + ib becomes the 2x2 block [[a, -b], [b, a]].
 *
 * A real matrix is complex linear when it commutes with J and complex
 * antilinear when it anticommutes with J. Every real matrix splits uniquely
 * into one of each.
 */

#ifndef REALQM_REALIFICATION_HPP_
#define REALQM_REALIFICATION_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "realqm/decompositions.hpp"
#include "realqm/matrix.hpp"

namespace realqm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Complex D x D matrix stored as separate real and imaginary parts.
struct ComplexMatrixRep {
  std::size_t d = 0;
  Matrix re;
  Matrix im;

  static ComplexMatrixRep zeros(std::size_t d) { return {d, Matrix(d, d), Matrix(d, d)}; }
  static ComplexMatrixRep identity(std::size_t d) {
    return {d, Matrix::identity(d), Matrix(d, d)};
  }

  Complex at(std::size_t j, std::size_t k) const { return {re(j, k), im(j, k)}; }
  void set(std::size_t j, std::size_t k, Complex z) {
    re(j, k) = z.real();
    im(j, k) = z.imag();
  }

  void validate() const {
    if (d == 0) throw DomainError("complex matrix: dimension must be positive");
    if (re.rows() != d || re.cols() != d || im.rows() != d || im.cols() != d)
      throw DimensionError("complex matrix: re/im must both be " + std::to_string(d) + "x" +
                           std::to_string(d));
    if (!re.all_finite() || !im.all_finite())
      throw DomainError("complex matrix: non-finite entries");
  }
};

inline ComplexMatrixRep operator*(const ComplexMatrixRep& a, const ComplexMatrixRep& b) {
  if (a.d != b.d) throw DimensionError("complex matmul: dimension mismatch");
  return {a.d, a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

/// Conjugate transpose.
inline ComplexMatrixRep adjoint(const ComplexMatrixRep& a) {
  return {a.d, a.re.transpose(), -a.im.transpose()};
}

/// An antisymmetric orthogonal real matrix with J^2 = -I, of side 2d.
class ComplexStructure {
 public:
  /// Validates an arbitrary candidate (used for the second unit K of the
  /// oscillator).
  static ComplexStructure from_matrix(Matrix j, const Tolerance& tol = {}) {
    detail::require_square(j, "ComplexStructure");
    const std::size_t n = j.rows();
    if (n == 0 || n % 2 != 0)
      throw DomainError("complex structure: side length must be even and positive");
    if (!is_antisymmetric(j, tol)) throw DomainError("complex structure: J is not antisymmetric");
    if (!approx_equal(j * j, -Matrix::identity(n), tol))
      throw DomainError("complex structure: J^2 != -I");
    return ComplexStructure(n / 2, std::move(j));
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t real_dim() const noexcept { return 2 * d_; }
  const Matrix& matrix() const noexcept { return j_; }

 private:
  ComplexStructure(std::size_t d, Matrix j) : d_(d), j_(std::move(j)) {}
  friend ComplexStructure standard_j(std::size_t d);

  std::size_t d_;
  Matrix j_;
};

/// The standard imaginary unit on R^{2d}: d copies of [[0, -1], [1, 0]].
inline ComplexStructure standard_j(std::size_t d) {
  if (d == 0) throw DomainError("standard_j: d must be positive");
  Matrix j(2 * d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    j(2 * k, 2 * k + 1) = -1.0;
    j(2 * k + 1, 2 * k) = 1.0;
  }
  return ComplexStructure(d, std::move(j));
}

/// Complex conjugation in the interleaved layout: d copies of diag(1, -1).
/// Serves as the canonical antilinear operator.
inline Matrix conjugation_operator(std::size_t d) {
  if (d == 0) throw DomainError("conjugation_operator: d must be positive");
  Matrix c(2 * d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    c(2 * k, 2 * k) = 1.0;
    c(2 * k + 1, 2 * k + 1) = -1.0;
  }
  return c;
}

inline Vector embed_vector(const ComplexVector& psi) {
  Vector out(2 * psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) {
    out[2 * k] = psi[k].real();
    out[2 * k + 1] = psi[k].imag();
  }
  return out;
}

inline ComplexVector extract_vector(const Vector& v) {
  if (v.size() % 2 != 0) throw DimensionError("extract_vector: odd length");
  ComplexVector out(v.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {v[2 * k], v[2 * k + 1]};
  return out;
}

inline Matrix embed_matrix(const ComplexMatrixRep& a) {
  a.validate();
  Matrix m(2 * a.d, 2 * a.d);
  for (std::size_t j = 0; j < a.d; ++j)
    for (std::size_t k = 0; k < a.d; ++k) {
      const double r = a.re(j, k);
      const double i = a.im(j, k);
      m(2 * j, 2 * k) = r;
      m(2 * j, 2 * k + 1) = -i;
      m(2 * j + 1, 2 * k) = i;
      m(2 * j + 1, 2 * k + 1) = r;
    }
  return m;
}

/// Inverse of embed_matrix. Requires the standard interleaved J and an input
/// that commutes with it.
inline ComplexMatrixRep extract_matrix(const Matrix& a, const ComplexStructure& j,
                                       const Tolerance& tol = {}) {
  detail::require_same_dim(a, j.matrix(), "extract_matrix");
  if (!approx_equal(j.matrix(), standard_j(j.d()).matrix(), tol))
    throw DomainError("extract_matrix: only the standard interleaved J is supported");
  if (!commutes(a, j.matrix(), tol))
    throw DomainError("extract_matrix: matrix does not commute with J (not complex linear)");
  ComplexMatrixRep out = ComplexMatrixRep::zeros(j.d());
  for (std::size_t r = 0; r < j.d(); ++r)
    for (std::size_t c = 0; c < j.d(); ++c) {
      out.re(r, c) = 0.5 * (a(2 * r, 2 * c) + a(2 * r + 1, 2 * c + 1));
      out.im(r, c) = 0.5 * (a(2 * r + 1, 2 * c) - a(2 * r, 2 * c + 1));
    }
  return out;
}

/// A = plus + minus with plus commuting and minus anticommuting with J.
struct LinearAntilinearSplit {
  Matrix plus;
  Matrix minus;
};

inline LinearAntilinearSplit split_linear_antilinear(const Matrix& a, const ComplexStructure& j) {
  detail::require_same_dim(a, j.matrix(), "split_linear_antilinear");
  const Matrix jaj = j.matrix() * a * j.matrix();
  return {(a - jaj) * 0.5, (a + jaj) * 0.5};
}

/// Real and imaginary parts of the complex inner product <phi, psi>.
struct ScalarProducts {
  double real_part;  ///< phi^T psi, symmetric
  double imag_part;  ///< -phi^T J psi, antisymmetric (symplectic form)
};

inline ScalarProducts scalar_products(const Vector& phi, const Vector& psi,
                                      const ComplexStructure& j) {
  if (phi.size() != j.real_dim() || psi.size() != j.real_dim())
    throw DimensionError("scalar_products: vector length must be " +
                         std::to_string(j.real_dim()));
  return {dot(phi, psi), -dot(phi, j.matrix() * psi)};
}

/// Independent property flags; a matrix may have several at once.
struct OperatorClass {
  bool symmetric = false;
  bool antisymmetric = false;
  bool orthogonal = false;
  bool symplectic = false;
  bool complex_linear = false;
  bool complex_antilinear = false;
};

inline OperatorClass classify(const Matrix& a, const ComplexStructure& j,
                              const Tolerance& tol = {}) {
  detail::require_same_dim(a, j.matrix(), "classify");
  OperatorClass c;
  c.symmetric = is_symmetric(a, tol);
  c.antisymmetric = is_antisymmetric(a, tol);
  c.orthogonal = is_orthogonal(a, tol);
  c.symplectic = is_symplectic(a, j.matrix(), tol);
  c.complex_linear = commutes(a, j.matrix(), tol);
  c.complex_antilinear = anticommutes(a, j.matrix(), tol);
  return c;
}

namespace detail {
inline Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Matrix e(n, n);
  e(r, c) = 1.0;
  return e;
}
}  // namespace detail

/// Ranks of the complex-linear and antilinear images of all real 2d x 2d
/// matrices. Both are 2 d^2.
struct SplitRanks {
  std::size_t linear;
  std::size_t antilinear;
};

inline SplitRanks split_subspace_ranks(std::size_t d) {
  const ComplexStructure j = standard_j(d);
  const std::size_t n = 2 * d;
  std::vector<Matrix> plus, minus;
  plus.reserve(n * n);
  minus.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto s = split_linear_antilinear(detail::unit_matrix(n, r, c), j);
      plus.push_back(std::move(s.plus));
      minus.push_back(std::move(s.minus));
    }
  return {span_rank(plus), span_rank(minus)};
}

/// Dimensions of the generator spaces: antisymmetric A (orthogonal group),
/// A = -JB with B symmetric (symplectic group), and A = -JB = -BJ with B
/// symmetric (unitary group). Expected 2d^2 - d, 2d^2 + d and d^2.
struct GeneratorRanks {
  std::size_t orthogonal;
  std::size_t symplectic;
  std::size_t unitary;
};

inline GeneratorRanks generator_space_ranks(std::size_t d) {
  const ComplexStructure j = standard_j(d);
  const Matrix& jm = j.matrix();
  const std::size_t n = 2 * d;
  std::vector<Matrix> orth, symp, unit;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Matrix e = detail::unit_matrix(n, r, c);
      const Matrix sym = (e + e.transpose()) * 0.5;
      orth.push_back((e - e.transpose()) * 0.5);
      symp.push_back(-(jm * sym));
      unit.push_back(-(jm * split_linear_antilinear(sym, j).plus));
    }
  return {span_rank(orth), span_rank(symp), span_rank(unit)};
}

}  // namespace realqm

#endif  // REALQM_REALIFICATION_HPP_
