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
 * @file    tensor.hpp
 * @brief   Real tensor products of realified spaces.
 *
 * The real product of R^{2Da} and R^{2Db} has dimension 4 Da Db, twice the
 * real dimension of the complex product. It carries two commuting imaginary
 * units J_a = J (x) I and J_b = I (x) J, and splits into the ranges of
 * P_+- = (I -+ J_a J_b)/2. On the range of P_+ one has J_a = J_b; that
 * subspace is identified with the complex tensor product. With more factors
 * every further factor k contributes a pair (I -+ J_a J_k)/2 anchored on the
 * first factor, and the physical subspace is the range of the product of
 * all "+" projectors.
 *
 * Dense matrices throughout; the total dimension is capped at 256.
 */

#ifndef REALQM_TENSOR_HPP_
#define REALQM_TENSOR_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "realqm/decompositions.hpp"
#include "realqm/matrix.hpp"
#include "realqm/realification.hpp"

namespace realqm {

inline constexpr std::size_t kMaxProductDim = 256;

/// Kronecker product, factor-a-major: (A (x) B)(i*rb + k, j*cb + l) = A(i,j) B(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  Matrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = aij * b(k, l);
    }
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  return out;
}

/// Complex Kronecker product, same index layout.
inline ComplexMatrixRep kron(const ComplexMatrixRep& a, const ComplexMatrixRep& b) {
  ComplexMatrixRep out = ComplexMatrixRep::zeros(a.d * b.d);
  for (std::size_t i = 0; i < a.d; ++i)
    for (std::size_t j = 0; j < a.d; ++j)
      for (std::size_t k = 0; k < b.d; ++k)
        for (std::size_t l = 0; l < b.d; ++l)
          out.set(i * b.d + k, j * b.d + l, a.at(i, j) * b.at(k, l));
  return out;
}

struct FactorSpace {
  std::size_t d;
  ComplexStructure j;

  static FactorSpace standard(std::size_t d) { return {d, standard_j(d)}; }
  std::size_t real_dim() const noexcept { return 2 * d; }
};

struct ProductSpace {
  std::vector<FactorSpace> factors;
  std::size_t dim = 0;
  /// Lifted imaginary units J_a, J_b, J_c, ...
  std::vector<Matrix> units;
  /// Range of the product of all "+" pair projectors.
  Matrix physical_projector;

  std::size_t factor_count() const noexcept { return factors.size(); }
};

namespace detail {
inline Matrix lift(const Matrix& op, std::size_t index, const std::vector<FactorSpace>& factors) {
  Matrix out = Matrix::identity(1);
  for (std::size_t f = 0; f < factors.size(); ++f)
    out = kron(out, f == index ? op : Matrix::identity(factors[f].real_dim()));
  return out;
}
}  // namespace detail

/// Pair projector (I - sign * J_a J_k)/2 for factor k >= 1. On its range
/// J_a = sign * J_k.
inline Matrix pair_projector(const ProductSpace& space, std::size_t k, int sign) {
  if (k == 0 || k >= space.factor_count())
    throw DimensionError("pair_projector: factor index must be in 1.." +
                         std::to_string(space.factor_count() - 1));
  if (sign != 1 && sign != -1) throw DomainError("pair_projector: sign must be +1 or -1");
  return (Matrix::identity(space.dim) - space.units[0] * space.units[k] * static_cast<double>(sign)) *
         0.5;
}

/// Product of pair projectors with the given signs, one per factor after the
/// first (P_eps Q_eta ... in the three-factor case).
inline Matrix subspace_projector(const ProductSpace& space, const std::vector<int>& signs) {
  if (signs.size() + 1 != space.factor_count())
    throw DomainError("subspace_projector: expected " + std::to_string(space.factor_count() - 1) +
                      " signs, got " + std::to_string(signs.size()));
  Matrix p = Matrix::identity(space.dim);
  for (std::size_t k = 1; k < space.factor_count(); ++k) p = p * pair_projector(space, k, signs[k - 1]);
  return p;
}

inline ProductSpace build_product_space(const std::vector<FactorSpace>& factors) {
  if (factors.size() < 2)
    throw DomainError("build_product_space: need at least two factors, got " +
                      std::to_string(factors.size()));
  std::size_t dim = 1;
  for (const FactorSpace& f : factors) {
    if (f.j.real_dim() != f.real_dim()) throw DimensionError("factor: J does not match d");
    dim *= f.real_dim();
    if (dim > kMaxProductDim)
      throw DomainError("build_product_space: total real dimension exceeds " +
                        std::to_string(kMaxProductDim));
  }
  ProductSpace space;
  space.factors = factors;
  space.dim = dim;
  for (std::size_t f = 0; f < factors.size(); ++f)
    space.units.push_back(detail::lift(factors[f].j.matrix(), f, factors));
  space.physical_projector = subspace_projector(space, std::vector<int>(factors.size() - 1, 1));
  return space;
}

inline ProductSpace build_product_space(const std::vector<std::size_t>& ds) {
  std::vector<FactorSpace> fs;
  for (std::size_t d : ds) fs.push_back(FactorSpace::standard(d));
  return build_product_space(fs);
}

/// Rank of an orthogonal projector as its rounded trace; throws if the trace
/// is further than 1e-6 from an integer.
inline std::size_t projector_rank(const Matrix& p) {
  const double tr = trace(p);
  const double r = std::round(tr);
  if (std::abs(tr - r) > 1e-6 || r < 0.0)
    throw DomainError("projector_rank: trace " + std::to_string(tr) + " is not integral");
  return static_cast<std::size_t>(r);
}

/// max over k of ||(J_a - sign_k J_k) Pi|| with Pi the selected subspace projector.
inline double subspace_unit_residual(const ProductSpace& space, const std::vector<int>& signs) {
  const Matrix pi = subspace_projector(space, signs);
  double worst = 0.0;
  for (std::size_t k = 1; k < space.factor_count(); ++k) {
    const Matrix rel = space.units[0] - space.units[k] * static_cast<double>(signs[k - 1]);
    worst = std::max(worst, frobenius_norm(rel * pi));
  }
  return worst;
}

/// J_a = sign_k J_k holds on the selected subspace for every k.
inline bool subspace_unit_relation(const ProductSpace& space, const std::vector<int>& signs,
                                   const Tolerance& tol = {}) {
  return detail::within(subspace_unit_residual(space, signs), tol, 1.0);
}

/// op acting on factor `index`, identity on the others.
inline Matrix lift_operator(const Matrix& op, std::size_t index, const ProductSpace& space) {
  if (index >= space.factor_count())
    throw DimensionError("lift_operator: factor index " + std::to_string(index) + " out of range");
  if (!op.is_square() || op.rows() != space.factors[index].real_dim())
    throw DimensionError("lift_operator: operator is " + op.shape_string() + ", factor needs " +
                         std::to_string(space.factors[index].real_dim()));
  return detail::lift(op, index, space.factors);
}

struct EscapeReport {
  bool maps_within = false;  ///< commutes with the physical projector
  bool maps_across = false;  ///< sends the physical subspace into its complement
  double commutator_residual = 0.0;
  double diagonal_block_residual = 0.0;  ///< ||Pi L Pi||
};

inline EscapeReport physical_escape_check(const Matrix& lifted, const ProductSpace& space,
                                          const Tolerance& tol = {}) {
  detail::require_same_dim(lifted, space.physical_projector, "physical_escape_check");
  const Matrix& pi = space.physical_projector;
  const Matrix rest = Matrix::identity(space.dim) - pi;
  const double scale = frobenius_norm(lifted);
  EscapeReport r;
  r.commutator_residual = commutator_residual(lifted, pi);
  r.diagonal_block_residual = frobenius_norm(pi * lifted * pi);
  const Matrix lp = lifted * pi;
  r.maps_within = detail::within(r.commutator_residual, tol, scale);
  r.maps_across = detail::within(r.diagonal_block_residual, tol, scale) &&
                  detail::within(frobenius_norm(rest * lp - lp), tol, scale);
  return r;
}

/// Orthonormal basis (as columns) of the physical subspace, from modified
/// Gram-Schmidt on the projected standard basis vectors in index order.
inline Matrix physical_basis(const ProductSpace& space) {
  std::vector<Vector> candidates;
  candidates.reserve(space.dim);
  for (std::size_t k = 0; k < space.dim; ++k) candidates.push_back(space.physical_projector.column(k));
  const std::vector<Vector> basis = orthonormalize(candidates, 1e-8);
  return Matrix::from_columns(basis, space.dim);
}

/// Isometry W from the realified complex product C^{prod d} into the physical
/// subspace: the complex basis vector |j1 j2 ...> goes to the normalized
/// projection of e_{j1,re} (x) e_{j2,re} (x) ..., and i|j1 j2 ...> to J_a of
/// that. For complex-linear factor operators A, B, ... it intertwines
/// embed(A (x) B (x) ...) with the real lift embed(A) (x) embed(B) (x) ....
inline Matrix complex_product_isometry(const ProductSpace& space) {
  std::size_t complex_dim = 1;
  for (const FactorSpace& f : space.factors) complex_dim *= f.d;
  Matrix w(space.dim, 2 * complex_dim);
  for (std::size_t q = 0; q < complex_dim; ++q) {
    // Decompose q into factor indices, last factor fastest.
    std::size_t rem = q, real_index = 0, stride = 1;
    for (std::size_t f = space.factor_count(); f-- > 0;) {
      const std::size_t jf = rem % space.factors[f].d;
      rem /= space.factors[f].d;
      real_index += 2 * jf * stride;
      stride *= space.factors[f].real_dim();
    }
    Vector v = space.physical_projector.column(real_index);
    const double nrm = norm2(v);
    for (double& x : v) x /= nrm;
    const Vector jv = space.units[0] * v;
    for (std::size_t i = 0; i < space.dim; ++i) {
      w(i, 2 * q) = v[i];
      w(i, 2 * q + 1) = jv[i];
    }
  }
  return w;
}

/// Symmetric, PSD, unit trace, commuting with every lifted unit, and
/// supported on the physical subspace.
inline bool validate_product_density(const Matrix& rho, const ProductSpace& space,
                                     const Tolerance& tol = {}) {
  if (!rho.is_square() || rho.rows() != space.dim) return false;
  if (!rho.all_finite() || !is_symmetric(rho, tol)) return false;
  if (std::abs(trace(rho) - 1.0) > tol.abs_tol) return false;
  if (sym_eig(rho, tol).values.front() < -tol.abs_tol) return false;
  for (const Matrix& u : space.units)
    if (!commutes(rho, u, tol)) return false;
  const Matrix& pi = space.physical_projector;
  const double scale = frobenius_norm(rho);
  return detail::within(frobenius_norm(pi * rho - rho), tol, scale) &&
         detail::within(frobenius_norm(rho * pi - rho), tol, scale) &&
         detail::within(frobenius_norm(pi * rho * pi - rho), tol, scale);
}

/// Rank of {phi (x) psi, (J phi) (x) psi, phi (x) (J psi), (J phi) (x) (J psi)}.
/// Four for nonzero phi, psi in the real product (they collapse to one
/// complex direction in the complex product).
inline std::size_t product_vector_rank(const Vector& phi, const Vector& psi,
                                       const ComplexStructure& ja, const ComplexStructure& jb) {
  const Vector jphi = ja.matrix() * phi;
  const Vector jpsi = jb.matrix() * psi;
  const std::vector<Vector> four = {kron(phi, psi), kron(jphi, psi), kron(phi, jpsi),
                                    kron(jphi, jpsi)};
  return numerical_rank(Matrix::from_columns(four, four.front().size()));
}

}  // namespace realqm

#endif  // REALQM_TENSOR_HPP_
