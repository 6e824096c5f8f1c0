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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Samples come from a fixed seed distinct from `check`.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "realqm/realqm.hpp"

using namespace realqm;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Tracks the worst residual against a bound; also collects hard failures.
class Gauge {
 public:
  Gauge(std::string name, double bound) : name_(std::move(name)), bound_(bound) {}
  void add(double r) {
    if (!std::isfinite(r)) r = INFINITY;
    worst_ = std::max(worst_, r);
  }
  bool ok() const { return worst_ <= bound_; }
  std::string str() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s=%.3g(<=%.0e)", name_.c_str(), worst_, bound_);
    return buf;
  }

 private:
  std::string name_;
  double bound_;
  double worst_ = 0.0;
};

Verdict combine(std::initializer_list<const Gauge*> gauges, std::vector<std::string> failures = {}) {
  Verdict v;
  for (const Gauge* g : gauges) {
    v.pass = v.pass && g->ok();
    v.detail += (v.detail.empty() ? "" : " ") + g->str();
  }
  for (const std::string& f : failures) {
    v.pass = false;
    v.detail += " " + f;
  }
  return v;
}

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat to_std(const ComplexMatrixRep& a) {
  CMat m(a.d, std::vector<std::complex<double>>(a.d));
  for (std::size_t i = 0; i < a.d; ++i)
    for (std::size_t k = 0; k < a.d; ++k) m[i][k] = a.at(i, k);
  return m;
}

ComplexMatrixRep from_std(const CMat& m) {
  ComplexMatrixRep a = ComplexMatrixRep::zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) a.set(i, k, m[i][k]);
  return a;
}

// Criterion 1
Verdict realification_homomorphism(Rng& rng) {
  Gauge hom("homomorphism", 1e-10), adj("adjoint", 1e-10);
  const auto t0 = std::chrono::steady_clock::now();
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 4);
    const ComplexMatrixRep a = random_complex_matrix(rng, d), b = random_complex_matrix(rng, d);
    const CMat ca = to_std(a), cb = to_std(b);
    CMat ab(d, std::vector<std::complex<double>>(d)), ad(d, std::vector<std::complex<double>>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) ab[i][k] += ca[i][m] * cb[m][k];
        ad[i][k] = std::conj(ca[k][i]);
      }
    hom.add(distance(embed_matrix(from_std(ab)), embed_matrix(a) * embed_matrix(b)));
    adj.add(distance(embed_matrix(from_std(ad)), embed_matrix(a).transpose()));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Gauge rt("runtime_s", 1.0);
  rt.add(secs);
  return combine({&hom, &adj, &rt});
}

// Criterion 2
Verdict split_correctness(Rng& rng) {
  Gauge sum("sum", 1e-10), plus("[A+,J]", 1e-10), minus("{A-,J}", 1e-10);
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 8);
    const ComplexStructure j = standard_j(d);
    const Matrix a = random_matrix(rng, 2 * d, 2 * d);
    const auto sp = split_linear_antilinear(a, j);
    sum.add(distance(sp.plus + sp.minus, a));
    plus.add(commutator_residual(sp.plus, j.matrix()));
    minus.add(anticommutator_residual(sp.minus, j.matrix()));
  }
  std::vector<std::string> bad;
  for (std::size_t d = 1; d <= 8; ++d) {
    const SplitRanks r = split_subspace_ranks(d);
    if (r.linear != 2 * d * d || r.antilinear != 2 * d * d)
      bad.push_back("ranks(D=" + std::to_string(d) + ")=" + std::to_string(r.linear) + "," +
                    std::to_string(r.antilinear));
  }
  return combine({&sum, &plus, &minus}, bad);
}

// Criterion 3
Verdict group_characterization(Rng& rng) {
  std::vector<std::string> bad;
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 4);
    const OperatorClass c = classify(embed_matrix(random_unitary(rng, d)), standard_j(d));
    if (!(c.orthogonal && c.symplectic && c.complex_linear)) bad.push_back("unitary#" + std::to_string(s));
  }
  for (std::size_t d = 1; d <= 3; ++d) {
    const GeneratorRanks g = generator_space_ranks(d);
    if (g.orthogonal != 2 * d * d - d || g.symplectic != 2 * d * d + d || g.unitary != d * d)
      bad.push_back("ranks(D=" + std::to_string(d) + ")=" + std::to_string(g.orthogonal) + "," +
                    std::to_string(g.symplectic) + "," + std::to_string(g.unitary));
  }
  Verdict v{bad.empty(), "100 unitaries classified; generator ranks at D=1..3 checked"};
  for (const auto& b : bad) v.detail += " " + b;
  return v;
}

// Criterion 4
Verdict spectral_statistics(Rng& rng) {
  Gauge psum("sum_p", 1e-10), mean("mean", 1e-10), var("variance", 1e-10);
  std::vector<std::string> bad;
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 8);
    const DensityMatrix rho = random_physical_density(rng, d);
    const Matrix am = random_symmetric(rng, 2 * d);
    const Observable a(am);
    const MeasurementStatistics st = measurement_statistics(rho, a);
    double p = 0.0, m1 = 0.0, m2 = 0.0;
    for (const Outcome& o : st.outcomes) {
      p += o.probability;
      m1 += o.probability * o.value;
      m2 += o.probability * o.value * o.value;
    }
    // Direct traces, independent of the eigendecomposition.
    const double tr1 = trace(rho.matrix() * am);
    const double tr2 = trace(rho.matrix() * am * am);
    psum.add(std::abs(p - 1.0));
    mean.add(std::abs(m1 - tr1));
    var.add(std::abs((m2 - m1 * m1) - (tr2 - tr1 * tr1)));

    const SpectralDecomposition sd = spectral_decompose(Observable(embed_matrix(random_hermitian(rng, d))));
    for (std::size_t m : sd.multiplicities)
      if (m % 2 != 0) bad.push_back("odd_multiplicity#" + std::to_string(s));
  }
  return combine({&psum, &mean, &var}, bad);
}

// Criterion 5
Verdict canonical_bracket(Rng& rng) {
  Gauge g("{x,p}-I", 1e-12);
  const OscillatorParams params{};
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 8);
    std::vector<double> xs(d);
    for (double& x : xs) x = std::exp(rng.uniform(-1.5, 1.5));
    const CanonicalPair cp = build_canonical_pair(LengthSpectrum(xs), params);
    const SymplecticForm w = SymplecticForm::from(standard_j(d), params.hbar);
    g.add(distance(poisson_bracket(cp.x, cp.p, w), Matrix::identity(2 * d)));
  }
  return combine({&g});
}

// Criterion 6
Verdict jacobi_identity(Rng& rng) {
  Gauge g("jacobi", 1e-9);
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 8);
    const SymplecticForm w = SymplecticForm::from(standard_j(d), 1.0);
    const Matrix a = random_symmetric(rng, 2 * d), b = random_symmetric(rng, 2 * d),
                 c = random_symmetric(rng, 2 * d);
    g.add(jacobi_residual(a, b, c, w));
  }
  return combine({&g});
}

// Criterion 7
Verdict propagator_invariants(Rng& rng) {
  Gauge uo("UtU-I", 1e-8), us("UtJU-J", 1e-8), tr("trace", 1e-9), pos("negativity", 1e-9),
      comm("[rho,J]", 1e-9);
  const double hbar = 1.0;
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s % 6);
    const ComplexStructure j = standard_j(d);
    Matrix hm = random_complex_linear_symmetric(rng, d);
    hm /= frobenius_norm(hm);  // |t| ||H|| / hbar = |t|
    const Hamiltonian h(hm, j);
    const double t = rng.uniform(-50.0, 50.0);
    const Matrix u = propagator(h, t, j, hbar).u;
    uo.add(orthogonality_residual(u));
    us.add(symplecticity_residual(u, j.matrix()));
    const DensityMatrix rho = evolve(random_physical_density(rng, d), h, t, j, hbar);
    tr.add(std::abs(trace(rho.matrix()) - 1.0));
    pos.add(std::max(0.0, -sym_eig(rho.matrix()).values.front()));
    comm.add(commutator_residual(rho.matrix(), j.matrix()));
  }
  return combine({&uo, &us, &tr, &pos, &comm});
}

// Criterion 8
Verdict spectrum_round_trip(Rng& rng) {
  const OscillatorParams params{};
  const double e0 = params.ground_energy();
  Gauge g("relative_error", 1e-10);
  std::vector<std::string> bad;
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = rng.index(1, 8);
    std::vector<double> targets(n);
    for (double& e : targets) e = rng.uniform(e0, 10.0 * e0);
    const LengthSpectrum xis = design_spectrum(targets, params, BranchPolicy{});
    const Vector eig = sym_eig(oscillator_hamiltonian(build_canonical_pair(xis, params), params).matrix()).values;
    std::vector<double> want;
    for (double e : targets) want.insert(want.end(), {e, e});
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < want.size(); ++i) g.add(std::abs(eig[i] - want[i]) / want[i]);

    std::vector<double> low = targets;
    low[rng.index(0, n - 1)] = rng.uniform(0.0, 0.999 * e0);
    try {
      design_spectrum(low, params, BranchPolicy{});
      bad.push_back("accepted_below_bound#" + std::to_string(s));
    } catch (const DomainError&) {
    }
  }
  return combine({&g}, bad);
}

// Criterion 9
Verdict uncertainty(Rng& rng) {
  const OscillatorParams params{};
  Gauge closed("closed_form", 1e-10), floor("below_floor", 1e-12), eq("equality_gap", 1e-12);
  for (int s = 0; s < 10000; ++s) {
    const Rho4dParams st = random_rho4d(rng);
    const double x1 = std::exp(rng.uniform(-2.0, 2.0)), x2 = std::exp(rng.uniform(-2.0, 2.0));
    const double direct = uncertainty_product_direct(st, x1, x2, params);
    closed.add(std::abs(direct - uncertainty_product(st, x1, x2, params)));
    floor.add(std::max(0.0, 0.5 * params.hbar - direct));
    if (s % 10 == 0) eq.add(std::abs(uncertainty_product_direct(st, x1, x1, params) - 0.5 * params.hbar));
  }
  return combine({&closed, &floor, &eq});
}

// Criterion 10
Verdict translation() {
  const OscillatorParams params{};
  const CanonicalPair cp = build_canonical_pair(LengthSpectrum({1.0}), params);
  const ComplexStructure j = standard_j(1);
  const Matrix u = translation_operator(cp, 1.0, j, 1.0);
  Gauge sym("UtJU-J", 1e-9);
  sym.add(symplecticity_residual(u, j.matrix()));
  const double orth = orthogonality_residual(u);
  std::vector<std::string> bad;
  if (!(orth > 0.01)) bad.push_back("orthogonal");
  Verdict v = combine({&sym}, bad);
  v.detail += " UtU-I=" + std::to_string(orth) + "(>0.01)";
  return v;
}

// Criterion 11
Verdict fermionic(Rng& rng) {
  const OscillatorParams params{};
  const double hw = params.hbar * params.omega;
  const Matrix i4 = Matrix::identity(4);
  Gauge ident("identities", 1e-12), cj("commutator_vs_JK", 1e-12), lj("ladder_aTa_vs_JK", 1e-12),
      lc("ladder_aTa_vs_commutator", 1e-12), traces("traces", 1e-10), prop("U'_forms", 1e-10);
  for (int s = 0; s < 100; ++s) {
    const double xi = std::exp(rng.uniform(-1.0, 1.0));
    const FermionicStructure fs = build_fermionic(xi, params);
    ident.add(std::max({distance(fs.x * fs.x, i4 * (xi * xi)), frobenius_norm(anticommutator(fs.x, fs.p)),
                        distance(fs.a * fs.a_t + fs.a_t * fs.a, i4), frobenius_norm(fs.a * fs.a)}));
    const Matrix h_jk = fermionic_hamiltonian(fs.k, params);
    const Matrix h_comm = fermionic_hamiltonian_commutator_form(fs, params);
    const Matrix h_ladder = fermionic_hamiltonian_ladder_form(fs, params);  // hbar w (a^T a - 1/2)
    cj.add(distance(h_comm, h_jk));
    lj.add(distance(h_ladder, h_jk));
    lc.add(distance(h_ladder, h_comm));

    const Rho4dParams st = random_rho4d(rng);
    const double t = rng.uniform(-10.0, 10.0);
    const DualPictureReport r = dual_picture(st, fs, t, params);
    traces.add(std::max({std::abs(trace(r.rho * h_jk) - 2.0 * st.delta * hw),
                         std::abs(trace(r.rho_tilde * h_jk) - 2.0 * st.delta * hw),
                         std::abs(trace(r.rho * fs.x)),
                         std::abs(trace(r.rho_tilde * fs.x) - 2.0 * (st.alpha - st.beta) * xi)}));
    prop.add(distance(fermionic_propagator(fs, t, params), fermionic_propagator_from_hamiltonian(fs, t, params)));
  }
  Verdict v = combine({&ident, &cj, &lj, &lc, &traces, &prop});
  if (!lj.ok() || !lc.ok()) v.detail += " [hbar w (a^T a - 1/2) equals -(hbar w/2) J K, not +]";
  return v;
}

// Criterion 12
Verdict tensor_structure(Rng& rng) {
  Gauge kill("(Ja-+Jb)P+-", 1e-10), three("three_factor", 1e-10), escape("P+ x P+", 1e-10);
  std::vector<std::string> bad;
  const OscillatorParams params{};
  for (std::size_t da = 1; da <= 3; ++da)
    for (std::size_t db = 1; db <= 3; ++db) {
      const ProductSpace sp = build_product_space(std::vector<std::size_t>{da, db});
      const Matrix pp = pair_projector(sp, 1, 1), pm = pair_projector(sp, 1, -1);
      const std::size_t want = 2 * da * db;
      if (projector_rank(pp) != want || projector_rank(pm) != want)
        bad.push_back("rank(" + std::to_string(da) + "," + std::to_string(db) + ")");
      kill.add(std::max(frobenius_norm((sp.units[0] - sp.units[1]) * pp),
                        frobenius_norm((sp.units[0] + sp.units[1]) * pm)));
      std::vector<double> xs(da);
      for (double& x : xs) x = std::exp(rng.uniform(-1.0, 1.0));
      const Matrix xa = lift_operator(build_canonical_pair(LengthSpectrum(xs), params).x, 0, sp);
      escape.add(frobenius_norm(pp * xa * pp));
    }
  for (const auto& t : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {1, 2, 1}, {2, 2, 2}, {3, 1, 2}}) {
    const ProductSpace sp = build_product_space(t);
    for (int e : {1, -1})
      for (int h : {1, -1}) three.add(subspace_unit_residual(sp, {e, h}));
  }
  return combine({&kill, &three, &escape}, bad);
}

std::string run_cli(const std::string& args, int& exit_code) {
  FILE* pipe = popen((std::string(REALQM_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  std::string out;
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Criterion 13
Verdict determinism() {
  const auto t0 = std::chrono::steady_clock::now();
  int c1 = 0, c2 = 0;
  const std::string a = run_cli("check --seed 0", c1);
  const std::string b = run_cli("check --seed 0", c2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> bad;
  if (c1 != 0 || c2 != 0) bad.push_back("exit=" + std::to_string(c1) + "," + std::to_string(c2));
  if (a != b) bad.push_back("reports differ");
  if (a.find("\"all_passed\": true") == std::string::npos) bad.push_back("not all families passed");
  Gauge rt("runtime_s(two runs)", 60.0);
  rt.add(secs);
  Verdict v = combine({&rt}, bad);
  v.detail += " bytes=" + std::to_string(a.size());
  return v;
}

}  // namespace

int main() {
  Rng rng(kSeed);
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"realification homomorphism", [&] { return realification_homomorphism(rng); }},
      {"linear/antilinear split", [&] { return split_correctness(rng); }},
      {"group characterization", [&] { return group_characterization(rng); }},
      {"spectral statistics", [&] { return spectral_statistics(rng); }},
      {"canonical bracket", [&] { return canonical_bracket(rng); }},
      {"jacobi identity", [&] { return jacobi_identity(rng); }},
      {"propagator invariants", [&] { return propagator_invariants(rng); }},
      {"spectrum design round trip", [&] { return spectrum_round_trip(rng); }},
      {"uncertainty floor and closed form", [&] { return uncertainty(rng); }},
      {"translation operator", [] { return translation(); }},
      {"fermionic block", [&] { return fermionic(rng); }},
      {"tensor structure", [&] { return tensor_structure(rng); }},
      {"end-to-end determinism", [] { return determinism(); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
