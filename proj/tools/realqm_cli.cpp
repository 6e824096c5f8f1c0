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

// realqm: desk-scale experiments on real-Hilbert-space quantum mechanics.
//
//   realqm spectrum 0.5,0.625,2.0 [--branch plus|minus] [--branches plus,minus,...]
//   realqm uncertainty --alpha A --beta B --gamma G --delta D --xi1 X1 --xi2 X2
//   realqm evolve --state SPEC --hamiltonian SPEC [--t-start T0] [--t-end T1] [--steps N]
//   realqm check [--suite all|kernel|realification|states|dynamics|oscillator|tensor]
//
// Exit codes: 0 success, 1 usage error, 2 domain-constraint violation,
// 3 invariant failure in check.

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "realqm/realqm.hpp"
#include "report.hpp"

namespace realqm::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCheckFailed = 3;

/// Malformed input: bad numbers, bad JSON, missing fields.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double abs_tol = 1e-10;
  double gap_tol = 1e-8;
  bool tol_given = false;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool diagnostics = false;

  OscillatorParams params() const { return {mass, omega, hbar}; }
  Tolerance tolerance() const { return {abs_tol, gap_tol}; }

  void validate() const {
    params().validate();
    if (!(abs_tol > 0.0) || !(gap_tol > 0.0))
      throw DomainError("tolerances must be positive");
  }

  Json to_json() const {
    Json j;
    j["hbar"] = hbar;
    j["mass"] = mass;
    j["omega"] = omega;
    return j;
  }
};

double parse_double(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw UsageError("malformed " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

Branch parse_branch(const std::string& s) {
  if (s == "plus" || s == "+") return Branch::plus;
  if (s == "minus" || s == "-") return Branch::minus;
  throw UsageError("unknown branch '" + s + "' (expected plus or minus)");
}

Json matrix_json(const Matrix& m) {
  Json j;
  j["dim"] = m.rows();
  Json data = Json::array();
  for (double v : m.flat()) data.push_back(v);
  j["data"] = std::move(data);
  return j;
}

/// Inline JSON, or @path to read it from a file.
Json load_spec(const std::string& text, const std::string& what) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + what + " file '" + text.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw UsageError(what + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

double field_double(const Json& spec, const char* key, const std::string& what) {
  if (!spec.contains(key) || !spec[key].is_number())
    throw UsageError(what + ": missing numeric field '" + key + "'");
  return spec[key].get<double>();
}

std::string field_type(const Json& spec, const std::string& what) {
  if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string())
    throw UsageError(what + ": expected an object with a string field 'type'");
  return spec["type"].get<std::string>();
}

Matrix field_matrix(const Json& spec, const std::string& what) {
  if (!spec.contains("dim") || !spec["dim"].is_number_unsigned())
    throw UsageError(what + ": missing positive integer field 'dim'");
  if (!spec.contains("data") || !spec["data"].is_array())
    throw UsageError(what + ": missing array field 'data' (row-major)");
  const auto dim = spec["dim"].get<std::size_t>();
  std::vector<double> flat;
  for (const Json& v : spec["data"]) {
    if (!v.is_number()) throw UsageError(what + ": non-numeric matrix entry");
    flat.push_back(v.get<double>());
  }
  if (dim == 0 || flat.size() != dim * dim)
    throw UsageError(what + ": 'data' must hold dim*dim = " + std::to_string(dim * dim) +
                     " entries, got " + std::to_string(flat.size()));
  return Matrix::from_flat(dim, flat);
}

void emit(const RunConfig& cfg, const Json& report, const Json& rows) {
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  if (cfg.format == "csv") {
    write_csv(os, rows);
  } else {
    write_json(os, report);
    os << "\n";
  }
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  std::string targets;
  std::string branch = "plus";
  std::string branches;
};

int cmd_spectrum(const RunConfig& cfg, const SpectrumArgs& args) {
  const OscillatorParams params = cfg.params();
  std::vector<double> targets;
  for (const std::string& s : split_list(args.targets)) targets.push_back(parse_double(s, "target"));
  if (targets.empty()) throw UsageError("no target energies given");

  BranchPolicy policy;
  policy.uniform = parse_branch(args.branch);
  if (!args.branches.empty()) {
    for (const std::string& s : split_list(args.branches)) policy.per_level.push_back(parse_branch(s));
    if (policy.per_level.size() != targets.size())
      throw UsageError("--branches lists " + std::to_string(policy.per_level.size()) +
                       " entries for " + std::to_string(targets.size()) + " targets");
  }

  const LengthSpectrum xis = design_spectrum(targets, params, policy);
  const CanonicalPair cp = build_canonical_pair(xis, params);
  const Hamiltonian h = oscillator_hamiltonian(cp, params);
  const Vector eig = sym_eig(h.matrix(), cfg.tolerance()).values;

  // Pair the sorted real-side eigenvalues with the targets in sorted order.
  std::vector<std::size_t> order(targets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return targets[a] < targets[b]; });
  std::vector<std::pair<double, double>> paired(targets.size());
  for (std::size_t r = 0; r < order.size(); ++r) paired[order[r]] = {eig[2 * r], eig[2 * r + 1]};

  Json levels = Json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double e = energy_level(xis[i], params);
    const double level_res = std::abs(e - targets[i]) / targets[i];
    const double eig_res =
        std::max(std::abs(paired[i].first - targets[i]), std::abs(paired[i].second - targets[i])) /
        targets[i];
    worst = std::max({worst, level_res, eig_res});
    Json row;
    row["index"] = i + 1;
    row["target"] = targets[i];
    row["branch"] = to_string(policy.at(i));
    row["xi"] = xis[i];
    row["energy"] = e;
    row["level_residual"] = level_res;
    row["eigenvalue_1"] = paired[i].first;
    row["eigenvalue_2"] = paired[i].second;
    row["eigen_residual"] = eig_res;
    levels.push_back(std::move(row));
  }

  Json report;
  report["command"] = "spectrum";
  report["config"] = cfg.to_json();
  report["bound"] = params.ground_energy();
  report["levels"] = levels;
  Json all = Json::array();
  for (double v : eig) all.push_back(v);
  report["eigenvalues"] = std::move(all);
  report["max_residual"] = worst;
  if (cfg.diagnostics) {
    report["x"] = matrix_json(cp.x);
    report["p"] = matrix_json(cp.p);
    report["hamiltonian"] = matrix_json(h.matrix());
  }
  emit(cfg, report, levels);
  return kExitOk;
}

// --- uncertainty ------------------------------------------------------------

struct UncertaintyArgs {
  double alpha = 0.25, beta = 0.25, gamma = 0.0, delta = 0.0;
  double xi1 = 1.0, xi2 = 1.0;
};

int cmd_uncertainty(const RunConfig& cfg, const UncertaintyArgs& a) {
  const OscillatorParams params = cfg.params();
  const Rho4dParams st{a.alpha, a.beta, a.gamma, a.delta};
  const DensityMatrix rho = rho4d(st);
  const CanonicalPair cp = build_canonical_pair(LengthSpectrum({a.xi1, a.xi2}), params);
  const double dx = std::sqrt(variance(rho, Observable(cp.x)));
  const double dp = std::sqrt(variance(rho, Observable(cp.p)));
  const double closed = uncertainty_product(st, a.xi1, a.xi2, params);
  const double bound = 0.5 * params.hbar;

  Json row;
  row["alpha"] = a.alpha;
  row["beta"] = a.beta;
  row["gamma"] = a.gamma;
  row["delta"] = a.delta;
  row["xi1"] = a.xi1;
  row["xi2"] = a.xi2;
  row["delta_x"] = dx;
  row["delta_p"] = dp;
  row["product"] = dx * dp;
  row["closed_form"] = closed;
  row["closed_form_residual"] = std::abs(dx * dp - closed);
  row["bound"] = bound;
  row["bound_satisfied"] = dx * dp >= bound - kEnergyBoundSlack;

  Json report;
  report["command"] = "uncertainty";
  report["config"] = cfg.to_json();
  for (auto it = row.begin(); it != row.end(); ++it) report[it.key()] = it.value();
  if (cfg.diagnostics) report["rho"] = matrix_json(rho.matrix());
  emit(cfg, report, Json::array({row}));
  return kExitOk;
}

// --- evolve -----------------------------------------------------------------

struct EvolveArgs {
  std::string state;
  std::string hamiltonian;
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t steps = 10;
  bool general_states = false;
};

struct HamiltonianSpec {
  Matrix h;
  std::optional<CanonicalPair> pair;  // x and p columns when available
};

HamiltonianSpec build_hamiltonian(const Json& spec, const OscillatorParams& params) {
  const std::string what = "hamiltonian";
  const std::string type = field_type(spec, what);
  if (type == "oscillator") {
    if (!spec.contains("xi") || !spec["xi"].is_array())
      throw UsageError(what + ": oscillator needs an array field 'xi'");
    std::vector<double> xs;
    for (const Json& v : spec["xi"]) {
      if (!v.is_number()) throw UsageError(what + ": non-numeric xi");
      xs.push_back(v.get<double>());
    }
    const CanonicalPair cp = build_canonical_pair(LengthSpectrum(xs), params);
    return {oscillator_hamiltonian(cp, params).matrix(), cp};
  }
  if (type == "fermionic") {
    const FermionicStructure fs = build_fermionic(field_double(spec, "xi", what), params);
    return {fs.h_prime, CanonicalPair{fs.x, fs.p}};
  }
  if (type == "matrix") return {field_matrix(spec, what), std::nullopt};
  throw UsageError(what + ": unknown type '" + type + "' (oscillator, fermionic, matrix)");
}

Matrix build_state_matrix(const Json& spec) {
  const std::string what = "state";
  const std::string type = field_type(spec, what);
  if (type == "rho4d") {
    const Rho4dParams p{field_double(spec, "alpha", what), field_double(spec, "beta", what),
                        field_double(spec, "gamma", what), field_double(spec, "delta", what)};
    validate_rho4d(p);
    return rho4d_matrix(p);
  }
  if (type == "matrix") return field_matrix(spec, what);
  throw UsageError(what + ": unknown type '" + type + "' (rho4d, matrix)");
}

int cmd_evolve(const RunConfig& cfg, const EvolveArgs& args) {
  const OscillatorParams params = cfg.params();
  const Tolerance tol = cfg.tolerance();
  tol.validate();
  const HamiltonianSpec hs = build_hamiltonian(load_spec(args.hamiltonian, "hamiltonian"), params);
  const Matrix rho_m = build_state_matrix(load_spec(args.state, "state"));
  if (hs.h.rows() % 2 != 0) throw DomainError("hamiltonian: dimension must be even");
  if (rho_m.rows() != hs.h.rows())
    throw DomainError("state has dimension " + std::to_string(rho_m.rows()) +
                      ", hamiltonian has " + std::to_string(hs.h.rows()));
  const ComplexStructure j = standard_j(hs.h.rows() / 2);
  const Hamiltonian h(hs.h, j, tol);
  const DensityMatrix rho0 = args.general_states ? DensityMatrix::general(rho_m, tol)
                                                 : DensityMatrix::physical(rho_m, j, tol);
  if (!h.complex_linear() && !cfg.diagnostics)
    throw DomainError("hamiltonian does not commute with J; evolution would not preserve trace "
                      "and physicality (rerun with --diagnostics to integrate it anyway)");
  if (args.steps == 0) throw UsageError("--steps must be positive");
  if (!std::isfinite(args.t_start) || !std::isfinite(args.t_end))
    throw UsageError("time grid must be finite");

  Json rows = Json::array();
  for (std::size_t k = 0; k <= args.steps; ++k) {
    const double t = args.t_start + (args.t_end - args.t_start) * static_cast<double>(k) /
                                         static_cast<double>(args.steps);
    Matrix rho;
    if (h.complex_linear()) {
      rho = evolve(rho0, h, t, j, params.hbar, tol).matrix();
    } else {
      rho = evolve_diagnostic(rho0.matrix(), h.matrix(), t, j, params.hbar);
    }
    Json row;
    row["t"] = t;
    row["trace"] = trace(rho);
    row["min_eigenvalue"] = sym_eig((rho + rho.transpose()) * 0.5, tol).values.front();
    row["j_commutator"] = commutator_residual(rho, j.matrix());
    row["energy"] = trace_of_product(rho, h.matrix());
    if (hs.pair) {
      row["x"] = trace_of_product(rho, hs.pair->x);
      row["p"] = trace_of_product(rho, hs.pair->p);
    }
    if (cfg.diagnostics) row["rho"] = matrix_json(rho);
    rows.push_back(std::move(row));
  }

  Json report;
  report["command"] = "evolve";
  report["config"] = cfg.to_json();
  report["dim"] = h.dim();
  report["hamiltonian_commutes_with_j"] = h.complex_linear();
  report["physical_state"] = rho0.physical();
  report["rows"] = rows;
  emit(cfg, report, rows);
  return kExitOk;
}

// --- check ------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, const std::string& suite) {
  CheckOptions opts;
  opts.seed = cfg.seed;
  opts.params = cfg.params();
  if (cfg.tol_given) opts.tolerance_override = cfg.abs_tol;
  const std::vector<InvariantResult> results = run_checks(suite, opts);

  Json rows = Json::array();
  Json families = Json::array();
  bool all_passed = true;
  for (const std::string& fam : check_families()) {
    Json invariants = Json::array();
    std::size_t passed = 0, failed = 0;
    for (const InvariantResult& r : results) {
      if (r.family != fam) continue;
      Json row;
      row["family"] = r.family;
      row["name"] = r.name;
      row["samples"] = r.samples;
      row["max_residual"] = r.max_residual;
      row["threshold"] = r.threshold;
      row["passed"] = r.passed();
      (r.passed() ? passed : failed) += 1;
      rows.push_back(row);
      row.erase("family");
      invariants.push_back(std::move(row));
    }
    if (invariants.empty()) continue;
    all_passed = all_passed && failed == 0;
    Json f;
    f["family"] = fam;
    f["passed"] = passed;
    f["failed"] = failed;
    f["invariants"] = std::move(invariants);
    families.push_back(std::move(f));
  }

  Json report;
  report["command"] = "check";
  report["config"] = cfg.to_json();
  report["seed"] = cfg.seed;
  report["suite"] = suite;
  report["families"] = std::move(families);
  report["all_passed"] = all_passed;
  emit(cfg, report, rows);
  return all_passed ? kExitOk : kExitCheckFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"realqm: quantum mechanics on a real Hilbert space, at desk scale"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--hbar", cfg.hbar, "Reduced Planck constant (default 1)");
  app.add_option("--mass", cfg.mass, "Oscillator mass (default 1)");
  app.add_option("--omega", cfg.omega, "Oscillator angular frequency (default 1)");
  auto* tol_opt = app.add_option("--tol", cfg.abs_tol,
                                 "Absolute tolerance for predicates; in check, replaces every "
                                 "invariant threshold");
  app.add_option("--gap-tol", cfg.gap_tol, "Relative gap merging nearby eigenvalues (default 1e-8)");
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps (default 0)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this path instead of stdout");
  app.add_flag("--diagnostics", cfg.diagnostics,
               "Include matrices in the output; let evolve integrate Hamiltonians that do not "
               "commute with J");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Design an oscillator with the given energy levels");
  spectrum->add_option("targets", sa.targets, "Comma-separated target energies")->required();
  spectrum->add_option("--branch", sa.branch, "Root for every level: plus or minus");
  spectrum->add_option("--branches", sa.branches, "Comma-separated root per level");

  UncertaintyArgs ua;
  auto* uncertainty = app.add_subcommand("uncertainty", "Delta x Delta p in the state rho4d");
  uncertainty->add_option("--alpha", ua.alpha)->required();
  uncertainty->add_option("--beta", ua.beta)->required();
  uncertainty->add_option("--gamma", ua.gamma, "default 0");
  uncertainty->add_option("--delta", ua.delta, "default 0");
  uncertainty->add_option("--xi1", ua.xi1)->required();
  uncertainty->add_option("--xi2", ua.xi2)->required();

  EvolveArgs ea;
  auto* evolve_cmd = app.add_subcommand("evolve", "Time series of an evolved density matrix");
  evolve_cmd->add_option("--state", ea.state, "State spec (JSON or @file)")->required();
  evolve_cmd->add_option("--hamiltonian", ea.hamiltonian, "Hamiltonian spec (JSON or @file)")
      ->required();
  evolve_cmd->add_option("--t-start", ea.t_start, "default 0");
  evolve_cmd->add_option("--t-end", ea.t_end, "default 1");
  evolve_cmd->add_option("--steps", ea.steps, "Number of intervals; rows = steps + 1 (default 10)");
  evolve_cmd->add_flag("--general-states", ea.general_states,
                       "Accept states that do not commute with J");

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "Run the randomized invariant suites");
  std::vector<std::string> suites = {"all"};
  suites.insert(suites.end(), check_families().begin(), check_families().end());
  check->add_option("--suite", suite, "Family to run, or all")->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.tol_given = tol_opt->count() > 0;

  try {
    cfg.validate();
    if (spectrum->parsed()) return cmd_spectrum(cfg, sa);
    if (uncertainty->parsed()) return cmd_uncertainty(cfg, ua);
    if (evolve_cmd->parsed()) return cmd_evolve(cfg, ea);
    if (check->parsed()) return cmd_check(cfg, suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace realqm::cli

int main(int argc, char** argv) { return realqm::cli::run(argc, argv); }
