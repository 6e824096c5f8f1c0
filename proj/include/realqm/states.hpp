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
 * @file    states.hpp
 * @brief   Observables, density matrices and measurement statistics on R^{2D}.
 *
 * Any real symmetric matrix is an observable. Two state sets are supported:
 * general states (symmetric, positive semidefinite, unit trace) and physical
 * states, which in addition commute with J. A complex density matrix rho_c
 * corresponds to the physical real state embed(rho_c)/2, since the real
 * trace of an embedded matrix is twice the complex one. Physical states
 * therefore never have an eigenvalue above 1/2.
 *
 * Sharp realizability: an eigenvalue a_n can be observed with certainty in
 * some physical state iff its eigenspace is J-invariant, i.e. [P_n, J] = 0.
 * If the eigenspace is J-invariant, any unit v in it gives the physical state
 * (v v^T + Jv (Jv)^T)/2 with variance zero. Conversely a physical state with
 * zero variance has its support, which is J-invariant, inside the eigenspace;
 * the library only relies on the first direction.
 */

#ifndef REALQM_STATES_HPP_
#define REALQM_STATES_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "realqm/decompositions.hpp"
#include "realqm/matrix.hpp"
#include "realqm/realification.hpp"

namespace realqm {

/// A real symmetric matrix.
class Observable {
 public:
  explicit Observable(Matrix m, const Tolerance& tol = {}) : m_(std::move(m)) {
    detail::require_square(m_, "Observable");
    if (!m_.all_finite()) throw DomainError("observable: non-finite entries");
    if (!is_symmetric(m_, tol)) throw DomainError("observable: matrix is not symmetric");
  }
  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

/// Symmetric, positive semidefinite, unit-trace real matrix. `physical()`
/// records that it was validated to commute with J.
class DensityMatrix {
 public:
  static DensityMatrix general(Matrix m, const Tolerance& tol = {}) {
    validate_state(m, tol);
    return DensityMatrix(std::move(m), false);
  }

  static DensityMatrix physical(Matrix m, const ComplexStructure& j, const Tolerance& tol = {}) {
    validate_state(m, tol);
    if (m.rows() != j.real_dim())
      throw DimensionError("density matrix: dimension does not match J");
    if (!commutes(m, j.matrix(), tol))
      throw DomainError("density matrix: state does not commute with J (not physical)");
    return DensityMatrix(std::move(m), true);
  }

  const Matrix& matrix() const noexcept { return m_; }
  bool physical() const noexcept { return physical_; }
  std::size_t dim() const noexcept { return m_.rows(); }

 private:
  DensityMatrix(Matrix m, bool physical) : m_(std::move(m)), physical_(physical) {}

  static void validate_state(const Matrix& m, const Tolerance& tol) {
    detail::require_square(m, "DensityMatrix");
    if (!m.all_finite()) throw DomainError("density matrix: non-finite entries");
    if (!is_symmetric(m, tol)) throw DomainError("density matrix: not symmetric");
    const double tr = trace(m);
    if (std::abs(tr - 1.0) > tol.abs_tol)
      throw DomainError("density matrix: trace " + std::to_string(tr) + " != 1");
    const double lo = sym_eig(m, tol).values.front();
    if (lo < -tol.abs_tol)
      throw DomainError("density matrix: negative eigenvalue " + std::to_string(lo));
  }

  Matrix m_;
  bool physical_;
};

/// A = sum_n a_n P_n with distinct a_n and orthogonal projectors P_n.
struct SpectralDecomposition {
  Vector eigenvalues;
  std::vector<Matrix> projectors;
  std::vector<std::size_t> multiplicities;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// Eigenvalues closer than `spectral_gap_tol * max(1, max|lambda|)` to their
/// sorted neighbour are merged into one cluster; the cluster value is the
/// mean and its projector spans the whole eigenspace.
inline SpectralDecomposition spectral_decompose(const Observable& a, const Tolerance& tol = {}) {
  const SymmetricEigen eig = sym_eig(a.matrix(), tol);
  const std::size_t n = eig.values.size();
  double spread = 1.0;
  for (double v : eig.values) spread = std::max(spread, std::abs(v));
  const double gap = tol.spectral_gap_tol * spread;

  SpectralDecomposition out;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] <= gap) ++end;
    double sum = 0.0;
    Matrix p(n, n);
    for (std::size_t k = start; k < end; ++k) {
      sum += eig.values[k];
      const Vector v = eig.vectors.column(k);
      p += outer(v, v);
    }
    out.eigenvalues.push_back(sum / static_cast<double>(end - start));
    out.projectors.push_back(std::move(p));
    out.multiplicities.push_back(end - start);
    start = end;
  }
  return out;
}

namespace detail {
inline void require_match(const DensityMatrix& rho, const Matrix& a, const char* where) {
  if (rho.dim() != a.rows() || !a.is_square())
    throw DimensionError(std::string(where) + ": state and observable dimensions differ");
}
}  // namespace detail

/// <A> = Tr(rho A)
inline double expectation(const DensityMatrix& rho, const Observable& a) {
  detail::require_match(rho, a.matrix(), "expectation");
  return trace_of_product(rho.matrix(), a.matrix());
}

/// Tr(rho (A - <A>)^2). Not clamped; rounding can leave values of order -1e-16.
inline double variance(const DensityMatrix& rho, const Observable& a) {
  detail::require_match(rho, a.matrix(), "variance");
  const double mean = trace_of_product(rho.matrix(), a.matrix());
  const Matrix shifted = a.matrix() - mean * Matrix::identity(a.dim());
  return trace_of_product(rho.matrix(), shifted * shifted);
}

struct Outcome {
  double value;
  double probability;
};

struct MeasurementStatistics {
  std::vector<Outcome> outcomes;
  double mean = 0.0;
  double variance = 0.0;
};

/// p_n = Tr(rho P_n), with mean and variance computed from the p_n.
inline MeasurementStatistics measurement_statistics(const DensityMatrix& rho, const Observable& a,
                                                    const Tolerance& tol = {}) {
  detail::require_match(rho, a.matrix(), "measurement_statistics");
  const SpectralDecomposition sd = spectral_decompose(a, tol);
  MeasurementStatistics st;
  for (std::size_t n = 0; n < sd.size(); ++n) {
    const double p = trace_of_product(rho.matrix(), sd.projectors[n]);
    st.outcomes.push_back({sd.eigenvalues[n], p});
    st.mean += p * sd.eigenvalues[n];
  }
  for (const Outcome& o : st.outcomes) st.variance += o.probability * (o.value - st.mean) * (o.value - st.mean);
  return st;
}

/// Real physical state embed(rho_c)/2 for a complex density matrix rho_c.
inline DensityMatrix physical_from_complex(const ComplexMatrixRep& rho_c, const Tolerance& tol = {}) {
  rho_c.validate();
  const Matrix real = embed_matrix(rho_c);
  if (!is_symmetric(real, tol)) throw DomainError("complex density: not Hermitean");
  double re_tr = 0.0, im_tr = 0.0;
  for (std::size_t k = 0; k < rho_c.d; ++k) {
    re_tr += rho_c.re(k, k);
    im_tr += rho_c.im(k, k);
  }
  if (std::abs(re_tr - 1.0) > tol.abs_tol || std::abs(im_tr) > tol.abs_tol)
    throw DomainError("complex density: trace is not 1");
  if (sym_eig(real, tol).values.front() < -tol.abs_tol)
    throw DomainError("complex density: not positive semidefinite");
  return DensityMatrix::physical(real * 0.5, standard_j(rho_c.d), tol);
}

/// Parameters of the general physical state on R^4.
struct Rho4dParams {
  double alpha = 0.25;
  double beta = 0.25;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Throws DomainError naming the first violated constraint.
inline void validate_rho4d(const Rho4dParams& s) {
  constexpr double slack = 1e-12;
  const auto fail = [](const std::string& what) { throw DomainError("rho4d: violated " + what); };
  if (!std::isfinite(s.alpha) || !std::isfinite(s.beta) || !std::isfinite(s.gamma) ||
      !std::isfinite(s.delta))
    fail("finiteness of alpha, beta, gamma, delta");
  if (std::abs(2.0 * (s.alpha + s.beta) - 1.0) > slack) {
    std::ostringstream os;
    os.precision(17);
    os << "2(alpha+beta) = 1 (got " << 2.0 * (s.alpha + s.beta) << ")";
    fail(os.str());
  }
  if (s.alpha < -slack) fail("alpha >= 0");
  if (s.beta < -slack) fail("beta >= 0");
  if (s.alpha * s.beta - s.gamma * s.gamma - s.delta * s.delta < -slack)
    fail("alpha*beta - gamma^2 - delta^2 >= 0");
}

inline Matrix rho4d_matrix(const Rho4dParams& s) {
  const double a = s.alpha, b = s.beta, g = s.gamma, d = s.delta;
  return Matrix::from_rows({{a, 0, g, d}, {0, a, -d, g}, {g, -d, b, 0}, {d, g, 0, b}});
}

/// Most general physical density matrix on R^4 (commutes with the standard J).
inline DensityMatrix rho4d(const Rho4dParams& s) {
  validate_rho4d(s);
  // Boundary states (alpha*beta = gamma^2 + delta^2) sit exactly on the PSD
  // cone; validate with the library default slack.
  return DensityMatrix::physical(rho4d_matrix(s), standard_j(2));
}

inline DensityMatrix rho4d(double alpha, double beta, double gamma, double delta) {
  return rho4d(Rho4dParams{alpha, beta, gamma, delta});
}

/// rho1 rho2 = rho2 rho1 = 0 within tolerance.
inline bool are_orthogonal_states(const DensityMatrix& r1, const DensityMatrix& r2,
                                  const Tolerance& tol = {}) {
  if (r1.dim() != r2.dim()) throw DimensionError("are_orthogonal_states: dimension mismatch");
  const double scale = frobenius_norm(r1.matrix()) * frobenius_norm(r2.matrix());
  return detail::within(frobenius_norm(r1.matrix() * r2.matrix()), tol, scale) &&
         detail::within(frobenius_norm(r2.matrix() * r1.matrix()), tol, scale);
}

/// Builds mutually orthogonal physical states greedily: each candidate is
/// projected onto the part of R^{2D} not yet covered, and the J-closed pair
/// {w, Jw} it spans becomes a new rank-2 state. Candidates that project to
/// (nearly) nothing are skipped. At most D states can be produced.
inline std::vector<DensityMatrix> greedy_orthogonal_physical_family(
    const ComplexStructure& j, const std::vector<Vector>& candidates, const Tolerance& tol = {}) {
  const std::size_t n = j.real_dim();
  Matrix free = Matrix::identity(n);
  std::vector<DensityMatrix> family;
  for (const Vector& c : candidates) {
    if (c.size() != n) throw DimensionError("greedy_orthogonal_physical_family: candidate length");
    Vector w = free * c;
    const double nrm = norm2(w);
    if (nrm < 1e-8 * std::max(1.0, norm2(c))) continue;
    for (double& x : w) x /= nrm;
    const Vector jw = j.matrix() * w;
    const Matrix support = outer(w, w) + outer(jw, jw);
    family.push_back(DensityMatrix::physical(support * 0.5, j, tol));
    free -= support;
  }
  return family;
}

struct SharpFlag {
  double eigenvalue;
  std::size_t multiplicity;
  bool realizable;
};

/// Per distinct eigenvalue: can it be observed sharply in a physical state?
inline std::vector<SharpFlag> sharp_realizability(const Observable& a, const ComplexStructure& j,
                                                  const Tolerance& tol = {}) {
  if (a.dim() != j.real_dim()) throw DimensionError("sharp_realizability: dimension mismatch");
  const SpectralDecomposition sd = spectral_decompose(a, tol);
  std::vector<SharpFlag> flags;
  for (std::size_t n = 0; n < sd.size(); ++n)
    flags.push_back({sd.eigenvalues[n], sd.multiplicities[n],
                     commutes(sd.projectors[n], j.matrix(), tol)});
  return flags;
}

/// Physical state concentrated on eigenvalue index `n` of `sd`, when that
/// eigenspace is J-invariant.
inline std::optional<DensityMatrix> physical_eigenstate(const SpectralDecomposition& sd,
                                                        std::size_t n, const ComplexStructure& j,
                                                        const Tolerance& tol = {}) {
  if (n >= sd.size()) throw DimensionError("physical_eigenstate: index out of range");
  const Matrix& p = sd.projectors[n];
  if (!commutes(p, j.matrix(), tol)) return std::nullopt;
  // Largest column of P is a nonzero vector of the eigenspace.
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    const double cn = norm2(p.column(c));
    if (cn > best_norm) {
      best_norm = cn;
      best = c;
    }
  }
  Vector v = p.column(best);
  for (double& x : v) x /= best_norm;
  const Vector jv = j.matrix() * v;
  return DensityMatrix::physical((outer(v, v) + outer(jv, jv)) * 0.5, j, tol);
}

}  // namespace realqm

#endif  // REALQM_STATES_HPP_
