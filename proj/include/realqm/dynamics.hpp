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
 * @file    dynamics.hpp
 * @brief   Quantum Poisson bracket, Liouville equation and propagators.
 *
 * The bracket of two symmetric matrices is {A, B} = A Omega B - B Omega A
 * with the antisymmetric Omega = -J / hbar; it is the real counterpart of
 * -(i/hbar)[A, B] and is again symmetric. A density matrix evolves by
 * d rho / dt = {H, rho}. For a time-independent H commuting with J this
 * integrates to rho(t) = U(t) rho(0) U(-t) with U(t) = exp(-(t/hbar) J H),
 * which is orthogonal and symplectic.
 */

#ifndef REALQM_DYNAMICS_HPP_
#define REALQM_DYNAMICS_HPP_

#include <cmath>
#include <string>

#include "realqm/expm.hpp"
#include "realqm/matrix.hpp"
#include "realqm/realification.hpp"
#include "realqm/states.hpp"

namespace realqm {

struct SymplecticForm {
  Matrix omega;  ///< -J / hbar
  double hbar = 1.0;

  static SymplecticForm from(const ComplexStructure& j, double hbar = 1.0) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be positive");
    return {j.matrix() * (-1.0 / hbar), hbar};
  }
};

/// Symmetric generator of time evolution. `complex_linear()` is computed,
/// not asserted.
class Hamiltonian {
 public:
  Hamiltonian(Matrix h, const ComplexStructure& j, const Tolerance& tol = {}) : h_(std::move(h)) {
    detail::require_same_dim(h_, j.matrix(), "Hamiltonian");
    if (!h_.all_finite()) throw DomainError("hamiltonian: non-finite entries");
    if (!is_symmetric(h_, tol)) throw DomainError("hamiltonian: matrix is not symmetric");
    complex_linear_ = commutes(h_, j.matrix(), tol);
  }
  const Matrix& matrix() const noexcept { return h_; }
  bool complex_linear() const noexcept { return complex_linear_; }
  std::size_t dim() const noexcept { return h_.rows(); }

 private:
  Matrix h_;
  bool complex_linear_ = false;
};

struct Propagator {
  Matrix u;
  double t = 0.0;
};

/// {A, B} = A Omega B - B Omega A
inline Matrix poisson_bracket(const Matrix& a, const Matrix& b, const SymplecticForm& w) {
  detail::require_same_dim(a, b, "poisson_bracket");
  detail::require_same_dim(a, w.omega, "poisson_bracket");
  return a * w.omega * b - b * w.omega * a;
}

/// ||{A,{B,C}} + {B,{C,A}} + {C,{A,B}}||_F
inline double jacobi_residual(const Matrix& a, const Matrix& b, const Matrix& c,
                              const SymplecticForm& w) {
  const Matrix sum = poisson_bracket(a, poisson_bracket(b, c, w), w) +
                     poisson_bracket(b, poisson_bracket(c, a, w), w) +
                     poisson_bracket(c, poisson_bracket(a, b, w), w);
  return frobenius_norm(sum);
}

/// ||[-JA, -JB] + hbar J C||_F, the bracket relation {A, B} = C written in
/// the Lie algebra of the symplectic group.
inline double symplectic_lie_form_residual(const Matrix& a, const Matrix& b, const Matrix& c,
                                           const ComplexStructure& j, double hbar) {
  const Matrix& jm = j.matrix();
  const Matrix ja = -(jm * a);
  const Matrix jb = -(jm * b);
  return frobenius_norm(commutator(ja, jb) + hbar * (jm * c));
}

inline bool symplectic_lie_form_check(const Matrix& a, const Matrix& b, const Matrix& c,
                                      const ComplexStructure& j, double hbar,
                                      const Tolerance& tol = {}) {
  const double scale = std::max(frobenius_norm(a) * frobenius_norm(b), hbar * frobenius_norm(c));
  return detail::within(symplectic_lie_form_residual(a, b, c, j, hbar), tol, scale);
}

/// d rho / dt = {H, rho} = H Omega rho - rho Omega H
inline Matrix liouville_rhs(const Matrix& h, const Matrix& rho, const SymplecticForm& w) {
  detail::require_same_dim(h, rho, "liouville_rhs");
  return poisson_bracket(h, rho, w);
}

inline Matrix liouville_rhs(const Hamiltonian& h, const DensityMatrix& rho,
                            const SymplecticForm& w) {
  return liouville_rhs(h.matrix(), rho.matrix(), w);
}

/// U(t) = exp(-(t/hbar) J H). Rejects Hamiltonians that do not commute with J.
inline Propagator propagator(const Hamiltonian& h, double t, const ComplexStructure& j,
                             double hbar = 1.0) {
  detail::require_same_dim(h.matrix(), j.matrix(), "propagator");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!h.complex_linear())
    throw DomainError("propagator: Hamiltonian does not commute with J; evolution would not "
                      "preserve trace and physicality");
  return {expm(j.matrix() * h.matrix() * (-t / hbar)), t};
}

/// rho(t) = U(t) rho(0) U(-t); the physical flag is carried over.
inline DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& h, double t,
                            const ComplexStructure& j, double hbar = 1.0,
                            const Tolerance& tol = {}) {
  if (rho0.dim() != h.dim()) throw DimensionError("evolve: state and Hamiltonian dimensions differ");
  const Matrix u = propagator(h, t, j, hbar).u;
  // U(-t) = U(t)^T for the orthogonal propagator; symmetrize away rounding.
  Matrix rho = u * rho0.matrix() * u.transpose();
  rho = (rho + rho.transpose()) * 0.5;
  return rho0.physical() ? DensityMatrix::physical(std::move(rho), j, tol)
                         : DensityMatrix::general(std::move(rho), tol);
}

/// Exact flow of d rho/dt = H Omega rho - rho Omega H for any symmetric H,
/// rho(t) = exp(t H Omega) rho(0) exp(-t Omega H). For H commuting with J
/// this coincides with evolve(). Otherwise the trace and positivity are not
/// preserved, so the result is returned as a bare matrix and is meant for
/// diagnostics only.
inline Matrix evolve_diagnostic(const Matrix& rho0, const Matrix& h, double t,
                                const ComplexStructure& j, double hbar = 1.0) {
  detail::require_same_dim(rho0, h, "evolve_diagnostic");
  const SymplecticForm w = SymplecticForm::from(j, hbar);
  const Matrix left = expm(h * w.omega * t);
  const Matrix right = expm(w.omega * h * (-t));
  return left * rho0 * right;
}

}  // namespace realqm

#endif  // REALQM_DYNAMICS_HPP_
