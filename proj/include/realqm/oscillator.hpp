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
 * @file    oscillator.hpp
 * @brief   Finite-dimensional canonical pair {x, p} = I and the harmonic
 *          oscillator built on it.
 *
 * On R^{2D}, block i of x is diag(xi_i, -xi_i) and block i of p is
 * (hbar / 2 xi_i) [[0, 1], [1, 0]]. Both anticommute with J, yet
 * {x, p} = I exactly and H = p^2/2m + m w^2 x^2/2 is diagonal and commutes
 * with J, with the doubly degenerate level
 *
 *     E_i = hbar^2 / (8 m xi_i^2) + m w^2 xi_i^2 / 2  >=  hbar w / 2
 *
 * on block i. Inverting this for xi_i lets any set of levels above hbar w/2
 * be assigned to the oscillator.
 *
 * For D = 2 and xi_1 = xi_2 = xi a second imaginary unit K commuting with x
 * and p yields ladder operators a, a^T with canonical anticommutation
 * relations (the fermionic structure).
 */

#ifndef REALQM_OSCILLATOR_HPP_
#define REALQM_OSCILLATOR_HPP_

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "realqm/dynamics.hpp"
#include "realqm/expm.hpp"
#include "realqm/matrix.hpp"
#include "realqm/realification.hpp"
#include "realqm/states.hpp"

namespace realqm {

struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("oscillator: mass must be positive");
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw DomainError("oscillator: omega must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("oscillator: hbar must be positive");
  }

  /// hbar * omega / 2, the lower bound of every level.
  double ground_energy() const { return 0.5 * hbar * omega; }
};

/// The positive lengths xi_1..xi_D.
class LengthSpectrum {
 public:
  explicit LengthSpectrum(std::vector<double> xis) : xis_(std::move(xis)) {
    if (xis_.empty()) throw DomainError("length spectrum: at least one length required");
    for (std::size_t i = 0; i < xis_.size(); ++i)
      if (!(xis_[i] > 0.0) || !std::isfinite(xis_[i]))
        throw DomainError("length spectrum: xi_" + std::to_string(i + 1) + " must be positive");
  }
  const std::vector<double>& values() const noexcept { return xis_; }
  std::size_t size() const noexcept { return xis_.size(); }
  double operator[](std::size_t i) const { return xis_.at(i); }

 private:
  std::vector<double> xis_;
};

struct CanonicalPair {
  Matrix x;
  Matrix p;
};

inline CanonicalPair build_canonical_pair(const LengthSpectrum& xis, const OscillatorParams& params) {
  params.validate();
  const std::size_t n = 2 * xis.size();
  CanonicalPair cp{Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const double xi = xis[i];
    const double q = params.hbar / (2.0 * xi);
    cp.x(2 * i, 2 * i) = xi;
    cp.x(2 * i + 1, 2 * i + 1) = -xi;
    cp.p(2 * i, 2 * i + 1) = q;
    cp.p(2 * i + 1, 2 * i) = q;
  }
  return cp;
}

/// H = p^2 / 2m + m w^2 x^2 / 2
inline Hamiltonian oscillator_hamiltonian(const CanonicalPair& pair, const OscillatorParams& params) {
  params.validate();
  const Matrix h = pair.p * pair.p * (0.5 / params.mass) +
                   pair.x * pair.x * (0.5 * params.mass * params.omega * params.omega);
  return Hamiltonian(h, standard_j(pair.x.rows() / 2));
}

inline double energy_level(double xi, const OscillatorParams& params) {
  const double m = params.mass, w = params.omega, hb = params.hbar;
  return hb * hb / (8.0 * m * xi * xi) + 0.5 * m * w * w * xi * xi;
}

inline Vector energy_levels(const LengthSpectrum& xis, const OscillatorParams& params) {
  params.validate();
  Vector e(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i) e[i] = energy_level(xis[i], params);
  return e;
}

/// Which root of the level equation: plus gives the larger length.
enum class Branch { plus, minus };

inline const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

/// Slack below hbar w / 2 that is still accepted (treated as the bound).
inline constexpr double kEnergyBoundSlack = 1e-12;

/// Length xi whose level is E:
///   xi^2 = (2E +- sqrt(4E^2 - hbar^2 w^2)) / (2 m w^2).
/// The minus root is evaluated as hbar / (2 m w xi_plus), which is the same
/// number (the two roots multiply to hbar^2 / 4 m^2 w^2) without cancellation.
inline double lengths_from_energy(double energy, const OscillatorParams& params, Branch branch) {
  params.validate();
  const double bound = params.ground_energy();
  if (!std::isfinite(energy) || energy < bound - kEnergyBoundSlack) {
    std::ostringstream os;
    os.precision(17);
    os << "energy " << energy << " is below the oscillator bound hbar*omega/2 = " << bound;
    throw DomainError(os.str());
  }
  const double m = params.mass, w = params.omega, hb = params.hbar;
  const double disc = std::max(0.0, 4.0 * energy * energy - hb * hb * w * w);
  const double xi_plus = std::sqrt((2.0 * energy + std::sqrt(disc)) / (2.0 * m * w * w));
  return branch == Branch::plus ? xi_plus : hb / (2.0 * m * w * xi_plus);
}

/// Root choice for each level: `per_level` if non-empty, else `uniform`.
struct BranchPolicy {
  Branch uniform = Branch::plus;
  std::vector<Branch> per_level;

  Branch at(std::size_t i) const { return per_level.empty() ? uniform : per_level.at(i); }
};

/// Lengths whose oscillator Hamiltonian has exactly the target levels (each
/// doubled on the real side). Duplicate targets give separate blocks.
inline LengthSpectrum design_spectrum(const std::vector<double>& targets,
                                      const OscillatorParams& params,
                                      const BranchPolicy& policy = {}) {
  params.validate();
  if (targets.empty()) throw DomainError("design_spectrum: no target energies");
  if (!policy.per_level.empty() && policy.per_level.size() != targets.size())
    throw DomainError("design_spectrum: branch list length differs from target count");
  std::vector<double> xis(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    xis[i] = lengths_from_energy(targets[i], params, policy.at(i));
  return LengthSpectrum(std::move(xis));
}

/// Delta x Delta p = hbar sqrt((a+b)^2 + a b (xi1/xi2 - xi2/xi1)^2) in the
/// physical state rho4d(a, b, g, d); independent of g and d.
inline double uncertainty_product(const Rho4dParams& state, double xi1, double xi2,
                                  const OscillatorParams& params) {
  validate_rho4d(state);
  params.validate();
  const LengthSpectrum check({xi1, xi2});
  const double s = state.alpha + state.beta;
  const double r = xi1 / xi2 - xi2 / xi1;
  return params.hbar * std::sqrt(s * s + state.alpha * state.beta * r * r);
}

/// The same product from the variances of x and p computed as traces.
inline double uncertainty_product_direct(const Rho4dParams& state, double xi1, double xi2,
                                         const OscillatorParams& params) {
  const DensityMatrix rho = rho4d(state);
  const CanonicalPair cp = build_canonical_pair(LengthSpectrum({xi1, xi2}), params);
  return std::sqrt(variance(rho, Observable(cp.x)) * variance(rho, Observable(cp.p)));
}

/// exp(-(d/hbar) J p): symplectic, but not orthogonal for d != 0 because J p
/// is symmetric.
inline Matrix translation_operator(const CanonicalPair& pair, double d, const ComplexStructure& j,
                                   double hbar = 1.0) {
  detail::require_same_dim(pair.p, j.matrix(), "translation_operator");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  return expm(j.matrix() * pair.p * (-d / hbar));
}

/// Second imaginary unit on R^4, commuting with x and p when xi_1 = xi_2.
inline Matrix fermionic_k() {
  return Matrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

/// Involution with K = S J S^{-1}; swaps coordinates 2 and 3.
inline Matrix fermionic_s() {
  return Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

struct FermionicStructure {
  double xi = 1.0;
  Matrix x;
  Matrix p;
  Matrix k;
  Matrix a;    ///< x/(2 xi) + (xi/hbar) K p
  Matrix a_t;  ///< x/(2 xi) - (xi/hbar) K p, equal to a^T
  Matrix h_prime;
  Matrix s;
};

/// (hbar w / 2) J K, the fermionic oscillator Hamiltonian.
inline Matrix fermionic_hamiltonian(const Matrix& k, const OscillatorParams& params) {
  return standard_j(2).matrix() * k * (0.5 * params.hbar * params.omega);
}

/// -(w/2) K (x p - p x)
inline Matrix fermionic_hamiltonian_commutator_form(const FermionicStructure& fs,
                                                    const OscillatorParams& params) {
  return fs.k * commutator(fs.x, fs.p) * (-0.5 * params.omega);
}

/// hbar w (a^T a - 1/2). Expanding the product gives
/// a^T a = 1/2 + (1/2 hbar) K (x p - p x), so this form equals
/// -(hbar w / 2) J K: it is the fermionic Hamiltonian with the opposite sign.
inline Matrix fermionic_hamiltonian_ladder_form(const FermionicStructure& fs,
                                                const OscillatorParams& params) {
  return (fs.a_t * fs.a - 0.5 * Matrix::identity(4)) * (params.hbar * params.omega);
}

/// hbar w (a a^T - 1/2), the ladder form that does equal (hbar w / 2) J K.
inline Matrix fermionic_hamiltonian_ladder_form_normal(const FermionicStructure& fs,
                                                       const OscillatorParams& params) {
  return (fs.a * fs.a_t - 0.5 * Matrix::identity(4)) * (params.hbar * params.omega);
}

inline FermionicStructure build_fermionic(double xi, const OscillatorParams& params) {
  params.validate();
  const CanonicalPair cp = build_canonical_pair(LengthSpectrum({xi, xi}), params);
  FermionicStructure fs;
  fs.xi = xi;
  fs.x = cp.x;
  fs.p = cp.p;
  fs.k = fermionic_k();
  const Matrix kp = fs.k * fs.p;
  fs.a = fs.x * (0.5 / xi) + kp * (xi / params.hbar);
  fs.a_t = fs.x * (0.5 / xi) - kp * (xi / params.hbar);
  fs.h_prime = fermionic_hamiltonian(fs.k, params);
  fs.s = fermionic_s();
  return fs;
}

/// Requires a two-block spectrum with equal lengths.
inline FermionicStructure build_fermionic(const LengthSpectrum& xis, const OscillatorParams& params) {
  if (xis.size() != 2) throw DomainError("fermionic structure: requires exactly two lengths (D = 2)");
  if (std::abs(xis[0] - xis[1]) > 1e-12 * std::max(xis[0], xis[1]))
    throw DomainError("fermionic structure: requires xi_1 = xi_2");
  return build_fermionic(xis[0], params);
}

/// U'(t) = exp((w t / 2) K)
inline Matrix fermionic_propagator(const FermionicStructure& fs, double t,
                                   const OscillatorParams& params) {
  return expm(fs.k * (0.5 * params.omega * t));
}

/// U'(t) = exp(-(t/hbar) J H'), the same operator reached through H'.
inline Matrix fermionic_propagator_from_hamiltonian(const FermionicStructure& fs, double t,
                                                    const OscillatorParams& params) {
  return expm(standard_j(2).matrix() * fs.h_prime * (-t / params.hbar));
}

/// A physical state rho and its image rho~ = S rho S^{-1}, which commutes
/// with K instead of J. Energies agree between the two pictures, position
/// expectations do not.
struct DualPictureReport {
  Matrix rho;
  Matrix rho_tilde;
  double energy = 0.0;        ///< Tr(rho H')
  double energy_tilde = 0.0;  ///< Tr(rho~ H')
  double x_expectation = 0.0;
  double x_expectation_tilde = 0.0;
  double rho_tilde_k_commutator = 0.0;  ///< ||[rho~, K]||
  /// ||S rho(t) S^{-1} - U~(t) rho~(0) U~(-t)|| with rho(t) = U'(t) rho U'(-t)
  /// and U~(t) = exp((w t / 2) J).
  double evolution_residual = 0.0;
  /// ||U~(t) - exp(-(t/hbar) K H')||
  double tilde_propagator_residual = 0.0;
};

inline DualPictureReport dual_picture(const Rho4dParams& state, const FermionicStructure& fs,
                                      double t, const OscillatorParams& params) {
  const DensityMatrix rho = rho4d(state);
  const Matrix& s = fs.s;
  DualPictureReport r;
  r.rho = rho.matrix();
  r.rho_tilde = s * r.rho * s;
  r.energy = trace_of_product(r.rho, fs.h_prime);
  r.energy_tilde = trace_of_product(r.rho_tilde, fs.h_prime);
  r.x_expectation = trace_of_product(r.rho, fs.x);
  r.x_expectation_tilde = trace_of_product(r.rho_tilde, fs.x);
  r.rho_tilde_k_commutator = commutator_residual(r.rho_tilde, fs.k);

  const Matrix jm = standard_j(2).matrix();
  const Matrix u = fermionic_propagator(fs, t, params);
  const Matrix u_back = fermionic_propagator(fs, -t, params);
  const Matrix rho_t = u * r.rho * u_back;
  const Matrix ut = expm(jm * (0.5 * params.omega * t));
  const Matrix ut_back = expm(jm * (-0.5 * params.omega * t));
  r.evolution_residual = frobenius_norm(s * rho_t * s - ut * r.rho_tilde * ut_back);
  r.tilde_propagator_residual = frobenius_norm(ut - expm(fs.k * fs.h_prime * (-t / params.hbar)));
  return r;
}

}  // namespace realqm

#endif  // REALQM_OSCILLATOR_HPP_
