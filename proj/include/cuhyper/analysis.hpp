#pragma once

// Executable versions of the spectral identities and bounds for complex unit
// hypergraphs. Checks never throw on a false statement: they return a report
// whose verdict is fail. Only malformed inputs raise cuh::Error.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cuhyper/eigen.hpp"
#include "cuhyper/hypergraph.hpp"

namespace cuh {

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

struct Measurement {
  std::string label;
  double value;
};

struct CheckReport {
  std::string check_name;
  std::string inputs_digest;
  std::vector<Measurement> measured;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Pass;
  std::string skip_reason;            // machine-readable, set iff skipped
  std::vector<std::string> failures;  // conditions that did not hold
  std::string detail;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
  bool failed() const noexcept { return verdict == Verdict::Fail; }
  bool skipped() const noexcept { return verdict == Verdict::Skipped; }
  std::optional<double> value(const std::string& label) const;
};

/// 64-bit FNV-1a over an exact (hexfloat) encoding of g plus `extra`.
std::string inputs_digest(const Hypergraph& g, const std::string& extra = {});

// Tolerances shared by the checks.
inline constexpr double kMatrixIdentityTolerance = 1e-12;
inline constexpr double kSpectralTolerance = 1e-8;
inline constexpr double kRayleighTolerance = 1e-9;

/// Sorted pointwise comparison within tol·(1 + max|λ|) of both lists.
bool spectra_match(std::vector<double> a, std::vector<double> b, double tol = kSpectralTolerance);
/// Values with |λ| above the nullity threshold, order kept.
std::vector<double> nonzero_part(const std::vector<double>& values, double threshold);

// --- operator identities ---------------------------------------------------
CheckReport check_laplacian_factorization(const Hypergraph& g);
CheckReport check_quadratic_forms(const Hypergraph& g, std::uint64_t seed, int samples = 100);
CheckReport check_sym_similarity(const Hypergraph& g);
CheckReport check_duality(const Hypergraph& g);
CheckReport check_solver_contract(const Hypergraph& g);

// --- first properties ------------------------------------------------------
CheckReport check_trace_identities(const Hypergraph& g);
CheckReport check_dual_spectra(const Hypergraph& g);
CheckReport check_kernels(const Hypergraph& g);
CheckReport check_regular_equivalence(const Hypergraph& g);
CheckReport check_regular_uniform_dual_L(const Hypergraph& g);

// --- transformations ---------------------------------------------------------
CheckReport check_vertex_deletion_interlacing(const Hypergraph& g, const std::set<std::size_t>& removed);
CheckReport check_edge_deletion_interlacing(const Hypergraph& g, const std::set<std::size_t>& removed);
/// Applies the switchings in order and verifies the conjugation identities for
/// the composite, plus cospectrality of A, K, K*, L, L*.
CheckReport check_switching(const Hypergraph& g, const std::vector<SwitchingFunction>& switchings);
CheckReport check_switching(const Hypergraph& g, const SwitchingFunction& f);

// --- extremal eigenvalues ----------------------------------------------------

struct EqualityAnalysis {
  bool holds = false;              // |λ_n(M(G')) - bound| <= 1e-8
  bool hypothesis = false;         // regular∧uniform (K) or uniform (L)
  bool component_predicted = false;  // some component attains the bound
  bool without_hypothesis = false;   // holds && !hypothesis (flag only)
  bool consistent() const noexcept { return holds == component_predicted && (!hypothesis || holds); }
};

struct BoundReport {
  std::size_t delta = 0;  // Δ
  std::size_t nabla = 0;  // ∇
  double rho_A = 0.0;
  double gershgorin_A = 0.0;
  double lambda_max_K = 0.0;
  double lambda_max_K_underlying = 0.0;
  std::optional<double> lambda_max_L;
  std::optional<double> lambda_max_L_underlying;

  double bound_rho = 0.0;   // Δ(∇-1)
  double bound_K = 0.0;     // ∇Δ
  double bound_L = 0.0;     // ∇
  double bound_max = 0.0;   // max{Δ,∇}
  std::optional<std::size_t> alpha;

  bool rho_ok = false;
  bool k_chain_ok = false;
  bool l_chain_ok = false;  // true when the L part is skipped
  bool max_ok = false;
  bool gershgorin_ok = false;
  EqualityAnalysis k_equality;
  std::optional<EqualityAnalysis> l_equality;

  bool all_ok() const noexcept;
};

/// Empty spectra count as maximum 0.
BoundReport bound_report(const Hypergraph& g);
CheckReport check_bounds(const Hypergraph& g);

CheckReport check_constant_phase_set(const Hypergraph& g, const std::set<std::size_t>& subset);
/// Throws TooLarge for n > 24.
CheckReport check_independence_bounds(const Hypergraph& g);
CheckReport check_rayleigh_extremality(const Hypergraph& g, std::uint64_t seed,
                                       int samples = 1000);

// --- suite -------------------------------------------------------------------

struct SuiteResult {
  std::vector<CheckReport> reports;  // ordered by check_name
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int rayleigh_samples = 1000;
  int quadratic_samples = 100;
  int sampled_deletions = 3;
};

/// Runs every check with deterministic deletion/switching samples drawn from
/// the seed. Same-theorem samples are merged into one report.
SuiteResult run_full_suite(const Hypergraph& g, const SuiteOptions& options = {});

/// Combines same-theorem reports: measurements keep their worst value per
/// label (max), any fail fails, all-skipped skips.
CheckReport merge_reports(const std::string& name, const std::vector<CheckReport>& parts);

}  // namespace cuh
