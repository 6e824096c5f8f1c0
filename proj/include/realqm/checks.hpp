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
 * @file    checks.hpp
 * @brief   Randomized invariant suites, one family per module.
 *
 * Each invariant reports the worst residual over its samples and the
 * threshold it is held to. Residuals are already normalized (relative where
 * the invariant is relative), so pass means `max_residual <= threshold`.
 * Counting invariants (ranks, classification flags) report the number of
 * offending samples against a threshold of zero.
 *
 * Every family draws from its own generator seeded with
 * `seed * 1000003 + family_index`, so running one family alone reproduces
 * exactly what it reports inside the full run.
 */

#ifndef REALQM_CHECKS_HPP_
#define REALQM_CHECKS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "realqm/decompositions.hpp"
#include "realqm/dynamics.hpp"
#include "realqm/expm.hpp"
#include "realqm/matrix.hpp"
#include "realqm/oscillator.hpp"
#include "realqm/random.hpp"
#include "realqm/realification.hpp"
#include "realqm/states.hpp"
#include "realqm/tensor.hpp"

namespace realqm {

struct InvariantResult {
  std::string family;
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double threshold = 0.0;

  bool passed() const { return std::isfinite(max_residual) && max_residual <= threshold; }
};

struct CheckOptions {
  std::uint64_t seed = 0;
  /// Replaces every floating-point threshold when set (counting invariants
  /// keep their zero threshold).
  std::optional<double> tolerance_override;
  OscillatorParams params;
};

inline const std::vector<std::string>& check_families() {
  static const std::vector<std::string> names = {"kernel",   "realification", "states",
                                                 "dynamics", "oscillator",    "tensor"};
  return names;
}

namespace detail {

class InvariantRecorder {
 public:
  InvariantRecorder(std::string family, const CheckOptions& opts)
      : family_(std::move(family)), opts_(opts) {}

  /// Floating-point invariant with its stated threshold.
  InvariantResult& begin(const std::string& name, double threshold) {
    out_.push_back({family_, name, 0, 0.0, opts_.tolerance_override.value_or(threshold)});
    return out_.back();
  }

  /// Counting invariant (offending samples must be zero).
  InvariantResult& begin_count(const std::string& name) {
    out_.push_back({family_, name, 0, 0.0, 0.0});
    return out_.back();
  }

  void flush_into(std::vector<InvariantResult>& out) const {
    out.insert(out.end(), out_.begin(), out_.end());
  }

 private:
  std::string family_;
  const CheckOptions& opts_;
  std::deque<InvariantResult> out_;  // references from begin() stay valid
};

inline void record(InvariantResult& r, double residual) {
  ++r.samples;
  const double v = std::isfinite(residual) ? residual : std::numeric_limits<double>::infinity();
  r.max_residual = std::max(r.max_residual, v);
}

inline double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

inline std::size_t even_dim(Rng& rng, std::size_t lo_d, std::size_t hi_d) {
  return 2 * rng.index(lo_d, hi_d);
}

// --- kernel ---------------------------------------------------------------

inline void check_kernel(Rng& rng, InvariantRecorder& rec) {
  auto& recon = rec.begin("sym_eig_reconstruction", 1e-9);
  auto& ortho = rec.begin("sym_eig_orthonormality", 1e-10);
  for (int s = 0; s < 40; ++s) {
    const std::size_t n = rng.index(1, 16);
    const Matrix a = random_symmetric(rng, n) * rng.uniform(0.1, 10.0);
    const SymmetricEigen e = sym_eig(a);
    const Matrix back = e.vectors * Matrix::diagonal(e.values) * e.vectors.transpose();
    record(recon, rel(distance(back, a), frobenius_norm(a)));
    record(ortho, distance(e.vectors.transpose() * e.vectors, Matrix::identity(n)));
  }

  auto& group = rec.begin("expm_group_property", 1e-8);
  auto& orth = rec.begin("expm_antisymmetric_orthogonal", 1e-9);
  for (int s = 0; s < 30; ++s) {
    const std::size_t n = rng.index(2, 12);
    const Matrix a = random_antisymmetric(rng, n);
    const double t1 = rng.uniform(-2.0, 2.0), t2 = rng.uniform(-2.0, 2.0);
    const Matrix lhs = expm(a * t1) * expm(a * t2);
    const Matrix rhs = expm(a * (t1 + t2));
    record(group, distance(lhs, rhs));
    record(orth, orthogonality_residual(rhs));
  }
}

// --- realification --------------------------------------------------------

inline void check_realification(Rng& rng, InvariantRecorder& rec) {
  auto& split_sum = rec.begin("split_reconstruction", 1e-14);
  auto& split_plus = rec.begin("split_plus_commutes_with_j", 1e-10);
  auto& split_minus = rec.begin("split_minus_anticommutes_with_j", 1e-10);
  for (int s = 0; s < 50; ++s) {
    const std::size_t d = rng.index(1, 8);
    const ComplexStructure j = standard_j(d);
    const Matrix a = random_matrix(rng, 2 * d, 2 * d);
    const auto sp = split_linear_antilinear(a, j);
    record(split_sum, rel(distance(sp.plus + sp.minus, a), frobenius_norm(a)));
    record(split_plus, commutator_residual(sp.plus, j.matrix()));
    record(split_minus, anticommutator_residual(sp.minus, j.matrix()));
  }

  auto& hom = rec.begin("embed_homomorphism", 1e-10);
  auto& adj = rec.begin("embed_adjoint_is_transpose", 1e-10);
  for (int s = 0; s < 50; ++s) {
    const std::size_t d = rng.index(1, 4);
    const ComplexMatrixRep a = random_complex_matrix(rng, d);
    const ComplexMatrixRep b = random_complex_matrix(rng, d);
    record(hom, distance(embed_matrix(a * b), embed_matrix(a) * embed_matrix(b)));
    record(adj, distance(embed_matrix(adjoint(a)), embed_matrix(a).transpose()));
  }

  auto& unit = rec.begin_count("unitary_is_orthogonal_symplectic_linear");
  auto& iff = rec.begin_count("orthogonal_symplectic_iff_commuting");
  for (int s = 0; s < 30; ++s) {
    const std::size_t d = rng.index(1, 4);
    const ComplexStructure j = standard_j(d);
    const Matrix u = embed_matrix(random_unitary(rng, d));
    const OperatorClass cu = classify(u, j);
    record(unit, (cu.orthogonal && cu.symplectic && cu.complex_linear) ? 0.0 : 1.0);
    const Matrix o = expm(random_antisymmetric(rng, 2 * d) * 2.0);
    for (const Matrix* m : {&u, &o}) {
      const OperatorClass c = classify(*m, j);
      record(iff, ((c.orthogonal && c.symplectic) == (c.orthogonal && c.complex_linear)) ? 0.0 : 1.0);
    }
  }

  auto& sranks = rec.begin_count("split_subspace_ranks");
  auto& granks = rec.begin_count("generator_space_ranks");
  for (std::size_t d = 1; d <= 3; ++d) {
    const SplitRanks sr = split_subspace_ranks(d);
    const double dd = static_cast<double>(d);
    record(sranks, std::abs(static_cast<double>(sr.linear) - 2 * dd * dd) +
                       std::abs(static_cast<double>(sr.antilinear) - 2 * dd * dd));
    const GeneratorRanks g = generator_space_ranks(d);
    record(granks, std::abs(static_cast<double>(g.orthogonal) - (2 * dd * dd - dd)) +
                       std::abs(static_cast<double>(g.symplectic) - (2 * dd * dd + dd)) +
                       std::abs(static_cast<double>(g.unitary) - dd * dd));
  }

  auto& sym = rec.begin("scalar_product_symmetry", 1e-12);
  auto& cplx = rec.begin("scalar_product_matches_complex", 1e-12);
  for (int s = 0; s < 50; ++s) {
    const std::size_t d = rng.index(1, 6);
    const ComplexStructure j = standard_j(d);
    const ComplexVector phi = random_complex_vector(rng, d);
    const ComplexVector psi = random_complex_vector(rng, d);
    const Vector rp = embed_vector(phi), rs = embed_vector(psi);
    const ScalarProducts ab = scalar_products(rp, rs, j);
    const ScalarProducts ba = scalar_products(rs, rp, j);
    record(sym, std::abs(ab.imag_part + ba.imag_part) + std::abs(ab.real_part - ba.real_part));
    Complex z{};
    for (std::size_t k = 0; k < d; ++k) z += std::conj(phi[k]) * psi[k];
    record(cplx, std::abs(z - Complex(ab.real_part, ab.imag_part)));
  }
}

// --- states ---------------------------------------------------------------

inline void check_states(Rng& rng, InvariantRecorder& rec) {
  auto& psum = rec.begin("probabilities_sum_to_one", 1e-10);
  auto& mean = rec.begin("mean_matches_spectral_sum", 1e-10);
  auto& var = rec.begin("variance_matches_spectral_sum", 1e-10);
  auto& varpos = rec.begin("variance_nonnegative", 1e-12);
  auto& trace_c = rec.begin("real_trace_matches_complex_trace", 1e-10);
  auto& doubling = rec.begin_count("embedded_multiplicities_even");
  for (int s = 0; s < 50; ++s) {
    const std::size_t d = rng.index(1, 8);
    const ComplexMatrixRep rho_c = random_complex_density(rng, d);
    const DensityMatrix rho = physical_from_complex(rho_c);
    const Observable a(random_symmetric(rng, 2 * d) * rng.uniform(0.5, 4.0));
    const MeasurementStatistics st = measurement_statistics(rho, a);
    double sum = 0.0;
    for (const Outcome& o : st.outcomes) sum += o.probability;
    record(psum, std::abs(sum - 1.0));
    const double scale = frobenius_norm(a.matrix());
    record(mean, rel(std::abs(expectation(rho, a) - st.mean), scale));
    record(var, rel(std::abs(variance(rho, a) - st.variance), scale * scale));
    record(varpos, std::max(0.0, -variance(rho, a)));

    const ComplexMatrixRep h = random_hermitian(rng, d);
    const Observable he(embed_matrix(h));
    const ComplexMatrixRep prod = rho_c * h;
    double tr_c = 0.0;
    for (std::size_t k = 0; k < d; ++k) tr_c += prod.re(k, k);
    record(trace_c, std::abs(expectation(rho, he) - tr_c));
    const SpectralDecomposition sd = spectral_decompose(he);
    std::size_t odd = 0;
    for (std::size_t m : sd.multiplicities) odd += m % 2;
    record(doubling, static_cast<double>(odd));
  }

  auto& r4 = rec.begin("rho4d_commutes_with_j", 1e-12);
  const Matrix j4 = standard_j(2).matrix();
  for (int s = 0; s < 100; ++s) record(r4, commutator_residual(rho4d(random_rho4d(rng)).matrix(), j4));

  auto& sharp = rec.begin_count("zero_variance_iff_concentrated");
  for (int s = 0; s < 20; ++s) {
    const std::size_t d = rng.index(1, 5);
    const ComplexStructure j = standard_j(d);
    const Observable a(random_complex_linear_symmetric(rng, d));
    const SpectralDecomposition sd = spectral_decompose(a);
    for (std::size_t n = 0; n < sd.size(); ++n) {
      const auto st = physical_eigenstate(sd, n, j);
      if (!st) {
        record(sharp, 1.0);
        continue;
      }
      const MeasurementStatistics ms = measurement_statistics(*st, a);
      const double v = variance(*st, a);
      const bool concentrated = std::any_of(ms.outcomes.begin(), ms.outcomes.end(),
                                            [](const Outcome& o) { return o.probability >= 1.0 - 1e-9; });
      record(sharp, (std::abs(v) <= 1e-9 && concentrated) ? 0.0 : 1.0);
    }
    // A generic full-rank state is spread over several outcomes.
    const DensityMatrix rho = random_physical_density(rng, d);
    if (sd.size() > 1) {
      const MeasurementStatistics ms = measurement_statistics(rho, a);
      const bool concentrated = std::any_of(ms.outcomes.begin(), ms.outcomes.end(),
                                            [](const Outcome& o) { return o.probability >= 1.0 - 1e-9; });
      record(sharp, (variance(rho, a) > 1e-9 && !concentrated) ? 0.0 : 1.0);
    }
  }

  auto& noncommuting = rec.begin_count("noncommuting_observable_has_unsharp_eigenvalue");
  for (int s = 0; s < 20; ++s) {
    const std::size_t d = rng.index(1, 5);
    const ComplexStructure j = standard_j(d);
    const Observable a(random_symmetric(rng, 2 * d));
    if (commutes(a.matrix(), j.matrix())) continue;
    const auto flags = sharp_realizability(a, j);
    const bool some_false =
        std::any_of(flags.begin(), flags.end(), [](const SharpFlag& f) { return !f.realizable; });
    record(noncommuting, some_false ? 0.0 : 1.0);
  }

  auto& family = rec.begin_count("max_orthogonal_physical_family_is_d");
  for (std::size_t d = 1; d <= 4; ++d) {
    const ComplexStructure j = standard_j(d);
    std::vector<Vector> cands;
    for (std::size_t k = 0; k < 3 * d; ++k) cands.push_back(random_vector(rng, 2 * d));
    const auto fam = greedy_orthogonal_physical_family(j, cands);
    double bad = std::abs(static_cast<double>(fam.size()) - static_cast<double>(d));
    for (std::size_t x = 0; x < fam.size(); ++x)
      for (std::size_t y = x + 1; y < fam.size(); ++y)
        if (!are_orthogonal_states(fam[x], fam[y])) bad += 1.0;
    record(family, bad);
  }
}

// --- dynamics -------------------------------------------------------------

inline void check_dynamics(Rng& rng, InvariantRecorder& rec, const OscillatorParams& params) {
  const double hbar = params.hbar;
  auto& sym = rec.begin("bracket_symmetric", 1e-10);
  auto& anti = rec.begin("bracket_antisymmetric", 0.0);
  auto& jac = rec.begin("jacobi_identity", 1e-9);
  auto& lie = rec.begin("symplectic_lie_form", 1e-10);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = even_dim(rng, 2, 8);
    const ComplexStructure j = standard_j(n / 2);
    const SymplecticForm w = SymplecticForm::from(j, hbar);
    const Matrix a = random_symmetric(rng, n), b = random_symmetric(rng, n),
                 c = random_symmetric(rng, n);
    const Matrix ab = poisson_bracket(a, b, w);
    const double sab = frobenius_norm(a) * frobenius_norm(b);
    record(sym, rel(symmetry_residual(ab), sab / hbar));
    record(anti, frobenius_norm(ab + poisson_bracket(b, a, w)));
    record(jac, rel(jacobi_residual(a, b, c, w), sab * frobenius_norm(c) / (hbar * hbar)));
    record(lie, rel(symplectic_lie_form_residual(a, b, ab, j, hbar), sab));
  }

  auto& uo = rec.begin("propagator_orthogonal", 1e-8);
  auto& us = rec.begin("propagator_symplectic", 1e-8);
  auto& tr = rec.begin("evolved_trace_one", 1e-9);
  auto& pos = rec.begin("evolved_positivity", 1e-9);
  auto& phys = rec.begin("evolved_commutes_with_j", 1e-9);
  auto& fd = rec.begin("liouville_matches_finite_difference", 1e-6);
  auto& trfree = rec.begin("liouville_trace_free", 1e-10);
  for (int s = 0; s < 30; ++s) {
    const std::size_t d = rng.index(1, 6);
    const ComplexStructure j = standard_j(d);
    Matrix hm = random_complex_linear_symmetric(rng, d);
    hm /= frobenius_norm(hm);
    const Hamiltonian h(hm, j);
    const double t = rng.uniform(-50.0, 50.0) * hbar;
    const Matrix u = propagator(h, t, j, hbar).u;
    record(uo, orthogonality_residual(u));
    record(us, symplecticity_residual(u, j.matrix()));
    const DensityMatrix rho0 = random_physical_density(rng, d);
    const DensityMatrix rho = evolve(rho0, h, t, j, hbar);
    record(tr, std::abs(trace(rho.matrix()) - 1.0));
    record(pos, std::max(0.0, -sym_eig(rho.matrix()).values.front()));
    record(phys, commutator_residual(rho.matrix(), j.matrix()));

    const SymplecticForm w = SymplecticForm::from(j, hbar);
    const double dt = 1e-4;
    const Matrix fwd = evolve(rho0, h, dt, j, hbar).matrix();
    const Matrix bwd = evolve(rho0, h, -dt, j, hbar).matrix();
    const Matrix rhs = liouville_rhs(h, rho0, w);
    record(fd, distance(rhs, (fwd - bwd) / (2.0 * dt)));
    const Matrix general = random_general_density(rng, 2 * d).matrix();
    record(trfree, std::abs(trace(liouville_rhs(hm, general, w))));
  }
}

// --- oscillator -----------------------------------------------------------

inline void check_oscillator(Rng& rng, InvariantRecorder& rec, const OscillatorParams& params) {
  const double hbar = params.hbar;
  auto& bracket = rec.begin("canonical_bracket", 1e-12);
  auto& anti = rec.begin("pair_anticommutes_with_j", 1e-12);
  auto& hcomm = rec.begin("hamiltonian_commutes_with_j", 1e-12);
  for (int s = 0; s < 30; ++s) {
    const std::size_t d = rng.index(1, 16);
    std::vector<double> xs(d);
    for (double& x : xs) x = std::exp(rng.uniform(-1.5, 1.5));
    const CanonicalPair cp = build_canonical_pair(LengthSpectrum(xs), params);
    const ComplexStructure j = standard_j(d);
    const SymplecticForm w = SymplecticForm::from(j, hbar);
    record(bracket, distance(poisson_bracket(cp.x, cp.p, w), Matrix::identity(2 * d)));
    record(anti, rel(anticommutator_residual(cp.x, j.matrix()) +
                         anticommutator_residual(cp.p, j.matrix()),
                     frobenius_norm(cp.x) + frobenius_norm(cp.p)));
    const Hamiltonian h = oscillator_hamiltonian(cp, params);
    record(hcomm, rel(commutator_residual(h.matrix(), j.matrix()), frobenius_norm(h.matrix())));
  }

  auto& round = rec.begin("spectrum_round_trip", 1e-10);
  auto& reject = rec.begin_count("below_bound_rejected");
  const double e0 = params.ground_energy();
  for (int s = 0; s < 50; ++s) {
    const std::size_t count = rng.index(1, 8);
    std::vector<double> targets(count);
    for (double& e : targets) e = rng.uniform(e0, 10.0 * e0);
    BranchPolicy policy;
    for (std::size_t i = 0; i < count; ++i)
      policy.per_level.push_back(rng.uniform01() < 0.5 ? Branch::plus : Branch::minus);
    const LengthSpectrum xis = design_spectrum(targets, params, policy);
    const Hamiltonian h = oscillator_hamiltonian(build_canonical_pair(xis, params), params);
    Vector eig = sym_eig(h.matrix()).values;
    std::vector<double> want;
    for (double e : targets) want.insert(want.end(), {e, e});
    std::sort(want.begin(), want.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) worst = std::max(worst, std::abs(eig[i] - want[i]) / want[i]);
    record(round, worst);

    std::vector<double> bad = targets;
    bad[rng.index(0, count - 1)] = e0 * rng.uniform(0.0, 0.999);
    bool rejected = false;
    try {
      design_spectrum(bad, params, policy);
    } catch (const DomainError&) {
      rejected = true;
    }
    record(reject, rejected ? 0.0 : 1.0);
  }

  auto& closed = rec.begin("uncertainty_closed_form", 1e-10);
  auto& floor = rec.begin("uncertainty_floor", 1e-12);
  for (int s = 0; s < 10000; ++s) {
    const Rho4dParams st = random_rho4d(rng);
    const double x1 = std::exp(rng.uniform(-2.0, 2.0)), x2 = std::exp(rng.uniform(-2.0, 2.0));
    const double cf = uncertainty_product(st, x1, x2, params);
    const double direct = uncertainty_product_direct(st, x1, x2, params);
    record(closed, rel(std::abs(cf - direct), cf));
    record(floor, std::max(0.0, 0.5 * hbar - direct));
  }

  auto& fid = rec.begin("fermionic_identities", 1e-12);
  auto& forms = rec.begin("fermionic_hamiltonian_forms", 1e-12);
  auto& prop = rec.begin("fermionic_propagator_forms", 1e-10);
  auto& dual = rec.begin("dual_picture_traces", 1e-10);
  auto& equiv = rec.begin("picture_energy_equivalence", 1e-10);
  const Matrix i4 = Matrix::identity(4);
  for (int s = 0; s < 100; ++s) {
    const double xi = std::exp(rng.uniform(-1.0, 1.0));
    const FermionicStructure fs = build_fermionic(xi, params);
    const double q = hbar / (2.0 * xi);
    double worst = 0.0;
    worst = std::max(worst, distance(fs.x * fs.x, i4 * (xi * xi)) / (xi * xi));
    worst = std::max(worst, distance(fs.p * fs.p, i4 * (q * q)) / (q * q));
    worst = std::max(worst, frobenius_norm(anticommutator(fs.x, fs.p)) / (xi * q));
    worst = std::max(worst, frobenius_norm(fs.a * fs.a));
    worst = std::max(worst, frobenius_norm(fs.a_t * fs.a_t));
    worst = std::max(worst, distance(fs.a * fs.a_t + fs.a_t * fs.a, i4));
    worst = std::max(worst, distance(fs.a_t, fs.a.transpose()));
    record(fid, worst);

    const double hw = hbar * params.omega;
    // The a^T a ladder form carries the opposite sign of (hbar w/2) J K.
    record(forms, std::max({distance(fermionic_hamiltonian_commutator_form(fs, params), fs.h_prime),
                            distance(fermionic_hamiltonian_ladder_form_normal(fs, params), fs.h_prime),
                            distance(fermionic_hamiltonian_ladder_form(fs, params), -fs.h_prime)}) /
                       hw);

    const double t = rng.uniform(-10.0, 10.0) / params.omega;
    record(prop, distance(fermionic_propagator(fs, t, params),
                          fermionic_propagator_from_hamiltonian(fs, t, params)));

    const Rho4dParams st = random_rho4d(rng);
    const DualPictureReport r = dual_picture(st, fs, t, params);
    record(dual, std::max({std::abs(r.energy - 2.0 * st.delta * hw) / hw,
                           std::abs(r.energy_tilde - 2.0 * st.delta * hw) / hw,
                           std::abs(r.x_expectation) / xi,
                           std::abs(r.x_expectation_tilde - 2.0 * (st.alpha - st.beta) * xi) / xi,
                           r.rho_tilde_k_commutator, r.evolution_residual,
                           r.tilde_propagator_residual}));

    const Matrix u = fermionic_propagator(fs, t, params);
    const Matrix rho_t = u * r.rho * u.transpose();
    const Matrix rho_tilde_t = fs.s * rho_t * fs.s;
    record(equiv, std::abs(trace_of_product(rho_t, fs.h_prime) -
                           trace_of_product(rho_tilde_t, fs.h_prime)) / hw);
  }

  auto& trans = rec.begin("translation_symplectic", 1e-9);
  auto& nonorth = rec.begin_count("translation_not_orthogonal");
  for (int s = 0; s < 20; ++s) {
    const std::size_t d = rng.index(1, 4);
    std::vector<double> xs(d);
    for (double& x : xs) x = std::exp(rng.uniform(-1.0, 1.0));
    const CanonicalPair cp = build_canonical_pair(LengthSpectrum(xs), params);
    const ComplexStructure j = standard_j(d);
    const double dist = rng.uniform(0.5, 2.0) * xs[0];
    const Matrix u = translation_operator(cp, dist, j, hbar);
    const double nu = frobenius_norm(u);
    record(trans, symplecticity_residual(u, j.matrix()) / (nu * nu));
    record(nonorth, orthogonality_residual(u) > 0.01 ? 0.0 : 1.0);
  }
}

// --- tensor ---------------------------------------------------------------

inline void check_tensor(Rng& rng, InvariantRecorder& rec) {
  auto& units = rec.begin("lifted_units_commute_and_square", 1e-12);
  auto& ranks = rec.begin_count("pair_projector_ranks");
  auto& alg = rec.begin("pair_projector_algebra", 1e-12);
  auto& rel_pm = rec.begin("pair_subspace_unit_relations", 1e-10);
  auto& anti = rec.begin("antilinear_lift_leaves_physical_subspace", 1e-10);
  auto& lin = rec.begin("linear_lift_preserves_physical_subspace", 1e-10);
  auto& ident = rec.begin("complex_product_identification", 1e-9);
  for (std::size_t da = 1; da <= 3; ++da)
    for (std::size_t db = 1; db <= 3; ++db) {
      const ProductSpace sp = build_product_space(std::vector<std::size_t>{da, db});
      const Matrix eye = Matrix::identity(sp.dim);
      record(units, std::max({commutator_residual(sp.units[0], sp.units[1]),
                              distance(sp.units[0] * sp.units[0], -eye),
                              distance(sp.units[1] * sp.units[1], -eye)}));
      const Matrix pp = pair_projector(sp, 1, 1), pm = pair_projector(sp, 1, -1);
      const double want = 2.0 * static_cast<double>(da * db);
      record(ranks, std::abs(static_cast<double>(projector_rank(pp)) - want) +
                        std::abs(static_cast<double>(projector_rank(pm)) - want));
      record(alg, std::max({distance(pp + pm, eye), frobenius_norm(pp * pm), distance(pp * pp, pp),
                            distance(pm * pm, pm)}));
      record(rel_pm, std::max(subspace_unit_residual(sp, {1}), subspace_unit_residual(sp, {-1})));

      for (std::size_t f = 0; f < 2; ++f) {
        const std::size_t df = f == 0 ? da : db;
        const ComplexStructure jf = standard_j(df);
        const auto split = split_linear_antilinear(random_matrix(rng, 2 * df, 2 * df), jf);
        const Matrix la = lift_operator(split.minus, f, sp);
        const Matrix ll = lift_operator(split.plus, f, sp);
        record(anti, rel(frobenius_norm(pp * la * pp), frobenius_norm(la)));
        record(lin, rel(commutator_residual(ll, pp), frobenius_norm(ll)));
      }

      const ComplexMatrixRep a = random_complex_matrix(rng, da);
      const ComplexMatrixRep b = random_complex_matrix(rng, db);
      const Matrix w = complex_product_isometry(sp);
      const Matrix lifted = kron(embed_matrix(a), embed_matrix(b));
      record(ident, std::max(distance(w.transpose() * w, Matrix::identity(w.cols())),
                             rel(distance(lifted * w, w * embed_matrix(kron(a, b))),
                                 frobenius_norm(lifted))));
    }

  auto& four = rec.begin_count("four_product_vectors_independent");
  for (int s = 0; s < 20; ++s) {
    const std::size_t da = rng.index(1, 3), db = rng.index(1, 3);
    const std::size_t r = product_vector_rank(random_vector(rng, 2 * da), random_vector(rng, 2 * db),
                                              standard_j(da), standard_j(db));
    record(four, r == 4 ? 0.0 : 1.0);
  }

  auto& pq = rec.begin("three_factor_projectors_commute", 1e-12);
  auto& rel3 = rec.begin("three_factor_unit_relations", 1e-10);
  auto& rank3 = rec.begin_count("three_factor_physical_rank");
  const std::array<std::array<std::size_t, 3>, 4> triples = {{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}}};
  for (const auto& t : triples) {
    const ProductSpace sp = build_product_space(std::vector<std::size_t>{t[0], t[1], t[2]});
    for (int e : {1, -1})
      for (int h : {1, -1}) {
        record(pq, commutator_residual(pair_projector(sp, 1, e), pair_projector(sp, 2, h)));
        record(rel3, subspace_unit_residual(sp, {e, h}));
      }
    record(rank3, std::abs(static_cast<double>(projector_rank(sp.physical_projector)) -
                           2.0 * static_cast<double>(t[0] * t[1] * t[2])));
  }
}

}  // namespace detail

/// Runs one family (`suite` = its name) or all of them (`suite` = "all").
/// Throws DomainError for an unknown suite name.
inline std::vector<InvariantResult> run_checks(const std::string& suite, const CheckOptions& opts) {
  opts.params.validate();
  const auto& names = check_families();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown check suite '" + suite + "'");
  std::vector<InvariantResult> out;
  for (std::size_t f = 0; f < names.size(); ++f) {
    if (suite != "all" && suite != names[f]) continue;
    Rng rng(opts.seed * 1000003ULL + f);
    detail::InvariantRecorder rec(names[f], opts);
    switch (f) {
      case 0: detail::check_kernel(rng, rec); break;
      case 1: detail::check_realification(rng, rec); break;
      case 2: detail::check_states(rng, rec); break;
      case 3: detail::check_dynamics(rng, rec, opts.params); break;
      case 4: detail::check_oscillator(rng, rec, opts.params); break;
      case 5: detail::check_tensor(rng, rec); break;
    }
    rec.flush_into(out);
  }
  return out;
}

}  // namespace realqm

#endif  // REALQM_CHECKS_HPP_
