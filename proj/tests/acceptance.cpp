// Acceptance criteria 1-11. Run with --criterion N for a single one; each
// prints one line "criterion N: PASS|FAIL <summary>" and the exit status is
// nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cuhyper/analysis.hpp"
#include "cuhyper/cli.hpp"
#include "cuhyper/io.hpp"
#include "fixtures.hpp"
#include "golden.hpp"
#include "oracle.hpp"

using namespace cuh;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

const std::vector<fixtures::CorpusEntry>& corpus() {
  static const std::vector<fixtures::CorpusEntry> instances = fixtures::corpus(500);
  return instances;
}

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", x);
  return buffer;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Outcome sharp_example() {
  const auto start = std::chrono::steady_clock::now();
  double worst_a = 0.0, worst_k = 0.0;
  for (std::size_t n : {3, 5, 8}) {
    const Hypergraph g = gen_single_edge_all_ones(n);
    std::vector<double> expected_a(n, 1.0), expected_k(n, 0.0);
    expected_a[0] = 1.0 - static_cast<double>(n);
    expected_k[n - 1] = static_cast<double>(n);
    worst_a = std::max(worst_a, max_gap(operator_spectrum(OperatorKind::A, g).values, expected_a));
    worst_k = std::max(worst_k, max_gap(operator_spectrum(OperatorKind::K, g).values, expected_k));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst_a <= 1e-9 && worst_k <= 1e-9 && seconds < 1.0,
          "n in {3,5,8}: max|spec(A) - {1-n, 1^(n-1)}| = " + fmt(worst_a) + ", max|spec(K) - {0^(n-1), n}| = " +
              fmt(worst_k) + " (tol 1e-9), " + fmt(seconds) + "s (limit 1s)"};
}

Outcome laplacian_factorization() {
  const auto start = std::chrono::steady_clock::now();
  double worst_k = 0.0, worst_l = 0.0;
  std::size_t with_l = 0;
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    const ComplexMatrix b = incidence_matrix(g);
    const ComplexMatrix bbt = b * b.adjoint();
    worst_k = std::max(worst_k, max_abs_diff(kirchhoff(g), bbt));
    if (has_zero_degree(g)) continue;
    ++with_l;
    ComplexMatrix dinv(g.num_vertices(), g.num_vertices());
    const DegreeProfile p = degree_profile(g);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) dinv(i, i) = 1.0 / static_cast<double>(p.degrees[i]);
    worst_l = std::max(worst_l, max_abs_diff(normalized(g), dinv * bbt));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst_k <= 1e-12 && worst_l <= 1e-12 && seconds < 30.0,
          "500 instances: max|K - BB+| = " + fmt(worst_k) + ", max|L - D^-1BB+| = " + fmt(worst_l) + " on " +
              std::to_string(with_l) + " instances without zero-degree vertices (tol 1e-12), " + fmt(seconds) +
              "s (limit 30s)"};
}

Outcome dual_spectra() {
  const NullityPolicy policy;
  std::size_t failures = 0, with_l = 0;
  const auto compare = [&](const std::vector<double>& x, const std::vector<double>& xs, long n_minus_m) {
    std::vector<double> both = x;
    both.insert(both.end(), xs.begin(), xs.end());
    const double tau = policy.threshold(both);
    const auto nz = nonzero_part(x, tau), nzs = nonzero_part(xs, tau);
    const long mu = static_cast<long>(x.size() - nz.size());
    const long mus = static_cast<long>(xs.size() - nzs.size());
    return spectra_match(nz, nzs, 1e-8) && mu - mus == n_minus_m;
  };
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    const long n_minus_m = static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges());
    bool ok = compare(operator_spectrum(OperatorKind::K, g).values,
                      operator_spectrum(OperatorKind::Kstar, g).values, n_minus_m);
    if (!has_zero_degree(g)) {
      ++with_l;
      ok = ok && compare(operator_spectrum(OperatorKind::L, g).values,
                         operator_spectrum(OperatorKind::Lstar, g).values, n_minus_m);
    }
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "500 instances (" + std::to_string(with_l) +
                             " with L defined): nonzero spec(K)=spec(K*), spec(L)=spec(L*) within 1e-8 and "
                             "mu0 - mu0* = n - m; failures = " +
                             std::to_string(failures)};
}

Outcome positivity() {
  double lowest_k = INFINITY, lowest_l = INFINITY;
  for (const auto& entry : corpus()) {
    lowest_k = std::min(lowest_k, operator_spectrum(OperatorKind::K, entry.graph).min());
    if (!has_zero_degree(entry.graph)) {
      lowest_l = std::min(lowest_l, operator_spectrum(OperatorKind::L, entry.graph).min());
    }
  }
  return {lowest_k >= -1e-9 && lowest_l >= -1e-9,
          "min lambda(K) = " + fmt(lowest_k) + ", min lambda(L) = " + fmt(lowest_l) + " (bound -1e-9)"};
}

Outcome traces() {
  double worst_a = 0.0, worst_k = 0.0, worst_l = 0.0;
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    const DegreeProfile p = degree_profile(g);
    const double volume = static_cast<double>(std::accumulate(p.degrees.begin(), p.degrees.end(), std::size_t{0}));
    const double n = static_cast<double>(g.num_vertices());
    worst_a = std::max(worst_a, std::abs(sum(operator_spectrum(OperatorKind::A, g).values)));
    worst_k = std::max(worst_k, std::abs(sum(operator_spectrum(OperatorKind::K, g).values) - volume) / (1.0 + volume));
    if (!has_zero_degree(g)) {
      worst_l = std::max(worst_l, std::abs(sum(operator_spectrum(OperatorKind::L, g).values) - n) / (1.0 + n));
    }
  }
  return {worst_a <= 1e-8 && worst_k <= 1e-8 && worst_l <= 1e-8,
          "max|sum lambda(A)| = " + fmt(worst_a) + ", max|sum lambda(K) - vol V|/(1+vol V) = " + fmt(worst_k) +
              ", max|sum lambda(L) - n|/(1+n) = " + fmt(worst_l) + " (tol 1e-8)"};
}

Outcome interlacing() {
  std::size_t vertex_runs = 0, edge_runs = 0, violations = 0, skipped = 0;
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      const CheckReport r = check_vertex_deletion_interlacing(g, {v});
      if (r.skipped()) {
        ++skipped;
        continue;
      }
      ++vertex_runs;
      violations += r.failed() ? 1 : 0;
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      ++edge_runs;
      violations += check_edge_deletion_interlacing(g, {e}).failed() ? 1 : 0;
    }
  }
  return {violations == 0, std::to_string(vertex_runs) + " single-vertex deletions (A, K, calL) and " +
                               std::to_string(edge_runs) + " single-edge deletions (K); violations beyond 1e-8 = " +
                               std::to_string(violations) + "; " + std::to_string(skipped) +
                               " deletions of the only vertex are vacuous"};
}

Outcome switching() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  std::size_t runs = 0, violations = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const Hypergraph& g = corpus()[i].graph;
    SwitchingFunction zeta{SwitchingFunction::Kind::Vertex, {}};
    SwitchingFunction xi{SwitchingFunction::Kind::Edge, {}};
    for (std::size_t v = 0; v < g.num_vertices(); ++v) zeta.values.push_back(Phase::from_angle(angle(rng)));
    for (std::size_t e = 0; e < g.num_edges(); ++e) xi.values.push_back(Phase::from_angle(angle(rng)));
    for (const SwitchingFunction& f : {zeta, xi}) {
      ++runs;
      violations += check_switching(g, f).passed() ? 0 : 1;
    }
  }
  return {violations == 0, std::to_string(runs) +
                               " switchings (100 vertex, 100 edge): matrix identities (tol 1e-12) and A/K/K*/L/L* "
                               "cospectrality (tol 1e-8) violations = " +
                               std::to_string(violations)};
}

Outcome bounds() {
  std::size_t inequality_failures = 0, independence_failures = 0, independence_runs = 0;
  std::size_t k_literal = 0, l_literal = 0, k_literal_connected = 0, l_literal_connected = 0;
  std::size_t component_mismatch = 0, with_l = 0;
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    const BoundReport b = bound_report(g);
    const DegreeProfile p = degree_profile(g);
    const std::vector<std::size_t> label = vertex_components(g);
    const bool connected = std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; });

    bool ok = b.rho_ok && b.k_chain_ok && b.max_ok;
    const bool k_eq = std::abs(b.lambda_max_K_underlying - b.bound_K) <= 1e-8;
    if (k_eq != (p.is_regular && p.is_uniform)) {
      ++k_literal;
      k_literal_connected += connected ? 1 : 0;
    }
    component_mismatch += b.k_equality.consistent() ? 0 : 1;
    if (b.lambda_max_L) {
      ++with_l;
      ok = ok && *b.lambda_max_L <= b.bound_L + 1e-8 && b.l_chain_ok;
      const bool l_eq = std::abs(*b.lambda_max_L_underlying - b.bound_L) <= 1e-8;
      if (l_eq != p.is_uniform) {
        ++l_literal;
        l_literal_connected += connected ? 1 : 0;
      }
      component_mismatch += b.l_equality->consistent() ? 0 : 1;
    }
    inequality_failures += ok ? 0 : 1;
    if (g.num_vertices() <= 12) {
      ++independence_runs;
      independence_failures += check_independence_bounds(g).passed() ? 0 : 1;
    }
  }
  const bool pass = inequality_failures == 0 && independence_failures == 0 && k_literal == 0 && l_literal == 0;
  std::ostringstream s;
  s << "inequality violations " << inequality_failures << "/500 (L on " << with_l << ")"
    << "; independence bounds failures " << independence_failures << "/" << independence_runs
    << "; equality iff regular-and-uniform (K): " << k_literal << " mismatches (" << k_literal_connected
    << " connected); equality iff uniform (L): " << l_literal << " mismatches (" << l_literal_connected
    << " connected); component-wise equality condition mismatches " << component_mismatch;
  return {pass, s.str()};
}

Outcome solver() {
  std::mt19937_64 rng(909);
  std::normal_distribution<double> normal;
  double worst_oracle = 0.0;
  for (int t = 0; t < 1000; ++t) {
    ComplexMatrix m2(2, 2);
    m2(0, 0) = normal(rng);
    m2(1, 1) = normal(rng);
    m2(0, 1) = {normal(rng), normal(rng)};
    m2(1, 0) = std::conj(m2(0, 1));
    worst_oracle = std::max(worst_oracle, max_gap(hermitian_eig(m2).values,
                                                  oracle::eig2(m2(0, 0).real(), m2(0, 1), m2(1, 1).real())));
    ComplexMatrix m3(3, 3);
    std::array<std::array<Complex, 3>, 3> rows{};
    for (std::size_t i = 0; i < 3; ++i) {
      m3(i, i) = normal(rng);
      for (std::size_t j = i + 1; j < 3; ++j) {
        m3(i, j) = {normal(rng), normal(rng)};
        m3(j, i) = std::conj(m3(i, j));
      }
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m3(i, j);
    worst_oracle = std::max(worst_oracle, max_gap(hermitian_eig(m3).values, oracle::eig3(rows)));
  }

  double worst_residual = 0.0;
  std::size_t solves = 0;
  for (const auto& entry : corpus()) {
    const Hypergraph& g = entry.graph;
    std::vector<OperatorKind> kinds{OperatorKind::A, OperatorKind::K, OperatorKind::Kstar};
    if (!has_zero_degree(g)) kinds.insert(kinds.end(), {OperatorKind::SymL, OperatorKind::L, OperatorKind::Lstar});
    for (OperatorKind kind : kinds) {
      ++solves;
      const ComplexMatrix m = build_operator(kind, g);
      const Spectrum s = operator_spectrum(kind, g, true);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const ComplexVector& x = (*s.vectors)[i];
        ComplexVector r = m.apply(x);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= s.values[i] * x[j];
        worst_residual = std::max(worst_residual, norm2(r) / (1.0 + std::abs(s.values[i])));
      }
    }
  }
  return {worst_oracle <= 1e-9 && worst_residual <= 1e-8,
          "1000 2x2 + 1000 3x3 Hermitian: max|lambda - closed form| = " + fmt(worst_oracle) +
              " (tol 1e-9); " + std::to_string(solves) + " corpus solves: max |Mx - lambda x|/(1+|lambda|) = " +
              fmt(worst_residual) + " (tol 1e-8)"};
}

Outcome rayleigh_extremality() {
  std::size_t failures = 0, without_l = 0;
  for (const auto& entry : corpus()) {
    const CheckReport r = check_rayleigh_extremality(entry.graph, entry.options.seed, 1000);
    failures += r.passed() ? 0 : 1;
    without_l += has_zero_degree(entry.graph) ? 1 : 0;
  }
  return {failures == 0, "500 instances x 1000 unit vectors for A, K, L (L undefined on " +
                             std::to_string(without_l) +
                             "): lambda_1 - 1e-9 <= RQ <= lambda_n + 1e-9 and RQ at eigenvectors within 1e-8; "
                             "failing instances = " +
                             std::to_string(failures)};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cuhyper");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Outcome round_trip_and_cli() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cuhyper_acceptance";
  fs::create_directories(dir);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const fs::path file = dir / ("corpus_" + std::to_string(i) + ".json");
    write_text_file(file, serialize_hypergraph(corpus()[i].graph));
    const std::string text = read_text_file(file);
    const Hypergraph back = parse_hypergraph(text);
    mismatches += (serialize_hypergraph(back) == text && back == corpus()[i].graph) ? 0 : 1;
  }

  const fs::path fixtures_dir = CUHYPER_FIXTURE_DIR;
  const std::string g3 = (fixtures_dir / "g3.json").string();
  const auto golden_text = [&](const std::string& name) { return read_text_file(fixtures_dir / name); };
  std::vector<std::string> golden_failures;
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok) golden_failures.push_back(what);
  };
  const CliRun spectrum = cli({"spectrum", g3, "--operator", "A"});
  expect(spectrum.code == 0 && spectrum.out == golden_text("g3_spectrum_A.txt"), "spectrum");
  const CliRun bounds = cli({"bounds", g3});
  expect(bounds.code == 0 && bounds.out == golden_text("g3_bounds.txt"), "bounds");
  const CliRun bounds_json = cli({"bounds", g3, "--json"});
  expect(bounds_json.code == 0 && golden::json_matches(bounds_json.out, golden_text("g3_bounds.json")), "bounds --json");
  const CliRun check = cli({"check", g3});
  expect(check.code == 0 && check.out == golden_text("g3_check.txt"), "check");

  write_text_file(dir / "broken.json", "{\"schema_version\":");
  SuiteResult failing;
  failing.failed = 1;
  expect(cli({"--help"}).code == 0, "exit 0 on --help");
  expect(cli({}).code == 1, "exit 1 without subcommand");
  expect(cli({"spectrum", g3}).code == 1, "exit 1 on missing --operator");
  expect(cli({"spectrum", (dir / "missing.json").string(), "--operator", "K"}).code == 1, "exit 1 on missing file");
  expect(cli({"check", (dir / "broken.json").string()}).code == 1, "exit 1 on malformed document");
  expect(suite_exit_code(failing) == 2, "exit 2 on a failed check");
  fs::remove_all(dir);

  std::string failed;
  for (const std::string& f : golden_failures) failed += " " + f;
  return {mismatches == 0 && golden_failures.empty(),
          "100 corpus files: byte-exact parse/serialize mismatches = " + std::to_string(mismatches) +
              "; G3 goldens and exit codes: " + (golden_failures.empty() ? "all match" : "FAILED:" + failed)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int selected = 0;
  app.add_option("--criterion", selected, "Run only this criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      sharp_example, laplacian_factorization, dual_spectra,  positivity, traces,
      interlacing,   switching,              bounds,        solver,     rayleigh_extremality,
      round_trip_and_cli};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (selected != 0 && static_cast<std::size_t>(selected) != i + 1) continue;
    Outcome outcome;
    try {
      outcome = criteria[i]();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << " " << outcome.summary
              << std::endl;
    all = all && outcome.pass;
  }
  return all ? 0 : 1;
}
