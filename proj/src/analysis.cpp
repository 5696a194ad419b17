#include "cuhyper/analysis.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "cuhyper/error.hpp"
#include "cuhyper/operators.hpp"

namespace cuh {

namespace {

constexpr const char* kEmptySkip = "empty hypergraph";
constexpr const char* kZeroDegreeSkip = "zero-degree vertex: D^-1 undefined";

class ReportBuilder {
 public:
  ReportBuilder(std::string name, const Hypergraph& g, double tolerance, const std::string& extra = {}) {
    report_.check_name = std::move(name);
    report_.inputs_digest = inputs_digest(g, extra);
    report_.tolerance = tolerance;
  }

  void measure(const std::string& label, double value) { report_.measured.push_back({label, value}); }

  void require(bool ok, const std::string& what) {
    if (!ok) report_.failures.push_back(what);
  }

  // lhs <= rhs + slack, both values recorded.
  void require_le(const std::string& label, double lhs, double rhs, double slack) {
    measure(label + ".lhs", lhs);
    measure(label + ".rhs", rhs);
    require(lhs <= rhs + slack, label);
  }

  void note(const std::string& text) {
    if (!report_.detail.empty()) report_.detail += "; ";
    report_.detail += text;
  }

  CheckReport finish() {
    report_.verdict = report_.failures.empty() ? Verdict::Pass : Verdict::Fail;
    return report_;
  }

  CheckReport skip(const std::string& reason) {
    report_.verdict = Verdict::Skipped;
    report_.skip_reason = reason;
    report_.failures.clear();
    return report_;
  }

 private:
  CheckReport report_;
};

std::vector<double> degrees_of(const Hypergraph& g) {
  const DegreeProfile p = degree_profile(g);
  return {p.degrees.begin(), p.degrees.end()};
}

double largest(const std::vector<double>& values) {
  return values.empty() ? 0.0 : values.back();
}

double smallest(const std::vector<double>& values) {
  return values.empty() ? 0.0 : values.front();
}

double max_pointwise_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

ComplexVector random_vector(std::mt19937_64& rng, std::size_t n, bool unit) {
  std::normal_distribution<double> normal;
  ComplexVector x(n);
  do {
    for (Complex& z : x) z = {normal(rng), normal(rng)};
  } while (norm2(x) == 0.0);
  if (unit) {
    const double length = norm2(x);
    for (Complex& z : x) z /= length;
  }
  return x;
}

SwitchingFunction random_switching(std::mt19937_64& rng, SwitchingFunction::Kind kind, std::size_t size) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  SwitchingFunction f{kind, {}};
  for (std::size_t i = 0; i < size; ++i) f.values.push_back(Phase::from_angle(angle(rng)));
  return f;
}

std::set<std::size_t> random_subset(std::mt19937_64& rng, std::size_t universe, std::size_t size) {
  std::vector<std::size_t> all(universe);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size)};
}

std::string set_string(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// conj(left_i) * X_ij * right_j
ComplexMatrix conjugate_by(const ComplexMatrix& x, const ComplexVector& left, const ComplexVector& right) {
  ComplexMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = std::conj(left[i]) * x(i, j) * right[j];
  return out;
}

ComplexVector conj_all(ComplexVector v) {
  for (Complex& z : v) z = std::conj(z);
  return v;
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, const std::vector<std::size_t>& keep) {
  ComplexMatrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

// Interlacing violation of a principal-submatrix spectrum `sub` (size n-r)
// against `full` (size n): λ_k(full) <= λ_k(sub) <= λ_{k+r}(full).
double interlacing_violation(const std::vector<double>& full, const std::vector<double>& sub) {
  const std::size_t r = full.size() - sub.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    worst = std::max(worst, full[k] - sub[k]);
    worst = std::max(worst, sub[k] - full[k + r]);
  }
  return worst;
}

bool has_constant_phase(const Hypergraph& g, std::size_t v, Phase* phase_out) {
  std::optional<Phase> first;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto w = g.phase(v, e);
    if (!w) continue;
    if (!first) {
      first = w;
    } else if (std::abs(w->value() - first->value()) > 1e-12) {
      return false;
    }
  }
  if (phase_out) *phase_out = first.value_or(Phase());
  return true;
}

// Equality in λ_n(M(G')) <= bound is attained exactly on components whose
// vertices all have degree Δ (K only) and whose edges all have size ∇.
bool component_attains(const Hypergraph& g, bool require_max_degree) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  const DegreeProfile profile = degree_profile(g);
  const std::vector<std::size_t> label = vertex_components(g);
  const std::size_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<bool> good(count, true);
  for (std::size_t v = 0; v < n; ++v)
    if (require_max_degree && profile.degrees[v] != profile.max_degree) good[label[v]] = false;
  for (const Edge& edge : g.edges()) {
    if (edge.empty() || edge.size() == profile.max_size) continue;
    good[label[edge.begin()->first]] = false;
  }
  return std::find(good.begin(), good.end(), true) != good.end();
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::optional<double> CheckReport::value(const std::string& label) const {
  for (const Measurement& m : measured)
    if (m.label == label) return m.value;
  return std::nullopt;
}

std::string inputs_digest(const Hypergraph& g, const std::string& extra) {
  std::string text = "n=" + std::to_string(g.num_vertices()) + ";";
  char buffer[96];
  for (const Edge& edge : g.edges()) {
    text += "[";
    for (const auto& [v, phase] : edge) {
      std::snprintf(buffer, sizeof buffer, "%zu:%a,%a;", v, phase.re(), phase.im());
      text += buffer;
    }
    text += "]";
  }
  text += "|" + extra;
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::snprintf(buffer, sizeof buffer, "%016" PRIx64, hash);
  return buffer;
}

bool spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (double x : b) scale = std::max(scale, std::abs(x));
  return max_pointwise_gap(a, b) <= tol * (1.0 + scale);
}

std::vector<double> nonzero_part(const std::vector<double>& values, double threshold) {
  std::vector<double> out;
  for (double x : values)
    if (std::abs(x) > threshold) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Operator identities

CheckReport check_laplacian_factorization(const Hypergraph& g) {
  ReportBuilder r("laplacian_factorization", g, kMatrixIdentityTolerance);
  const ComplexMatrix b = incidence_matrix(g);
  const ComplexMatrix bbt = b * b.adjoint();
  const ComplexMatrix a = adjacency_matrix(g);
  const ComplexMatrix k = kirchhoff(g);

  const double k_gap = max_abs_diff(k, bbt);
  r.measure("max|K-BB+|", k_gap);
  r.require(k_gap <= kMatrixIdentityTolerance, "K = BB+");

  const std::vector<double> d = degrees_of(g);
  double diag_a = 0.0, diag_k = 0.0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    diag_a = std::max(diag_a, std::abs(a(i, i)));
    diag_k = std::max(diag_k, std::abs(k(i, i) - d[i]));
  }
  r.measure("max|diag A|", diag_a);
  r.measure("max|diag K - deg|", diag_k);
  r.require(diag_a == 0.0, "A has zero diagonal");
  r.require(diag_k == 0.0, "diag K equals degrees");
  r.measure("hermitian_defect_A", a.hermitian_defect());
  r.measure("hermitian_defect_K", k.hermitian_defect());

  if (has_zero_degree(g)) {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    ComplexMatrix dinv_bbt = bbt;
    for (std::size_t i = 0; i < dinv_bbt.rows(); ++i)
      for (std::size_t j = 0; j < dinv_bbt.cols(); ++j) dinv_bbt(i, j) /= d[i];
    const double l_gap = max_abs_diff(normalized(g), dinv_bbt);
    r.measure("max|L-D^-1BB+|", l_gap);
    r.require(l_gap <= kMatrixIdentityTolerance, "L = D^-1 BB+");
  }
  return r.finish();
}

CheckReport check_quadratic_forms(const Hypergraph& g, std::uint64_t seed, int samples) {
  ReportBuilder r("quadratic_forms", g, 1e-9, "seed=" + std::to_string(seed));
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  std::mt19937_64 rng(seed);
  const ComplexMatrix k = kirchhoff(g);
  const bool with_l = !has_zero_degree(g);
  const ComplexMatrix sym_l = with_l ? sym_normalized(g) : ComplexMatrix();
  const std::vector<double> d = degrees_of(g);

  double worst_k = 0.0, worst_l = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector x = random_vector(rng, g.num_vertices(), false);
    double edge_sum = 0.0, edge_sum_l = 0.0;
    for (const Edge& edge : g.edges()) {
      Complex acc{}, acc_l{};
      for (const auto& [v, phase] : edge) {
        acc += phase.inverse().value() * x[v];
        acc_l += phase.inverse().value() / std::sqrt(d[v]) * x[v];
      }
      edge_sum += std::norm(acc);
      edge_sum_l += std::norm(acc_l);
    }
    const double xkx = inner(x, k.apply(x)).real();
    worst_k = std::max(worst_k, std::abs(xkx - edge_sum) / (1.0 + std::abs(xkx)));
    if (with_l) {
      const double xlx = inner(x, sym_l.apply(x)).real();
      worst_l = std::max(worst_l, std::abs(xlx - edge_sum_l) / (1.0 + std::abs(xlx)));
    }
  }
  r.measure("max_relative_gap_K", worst_k);
  r.require(worst_k <= 1e-9, "x+Kx = sum_e |sum w^-1 x|^2");
  if (with_l) {
    r.measure("max_relative_gap_calL", worst_l);
    r.require(worst_l <= 1e-9, "x+calLx = sum_e |sum w^-1 x / sqrt(deg)|^2");
  } else {
    r.note("calL part skipped: " + std::string(kZeroDegreeSkip));
  }
  return r.finish();
}

CheckReport check_sym_similarity(const Hypergraph& g) {
  ReportBuilder r("sym_similarity", g, kMatrixIdentityTolerance);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  if (has_zero_degree(g)) return r.skip(kZeroDegreeSkip);
  const std::vector<double> d = degrees_of(g);
  const ComplexMatrix l = normalized(g);
  const ComplexMatrix sym_l = sym_normalized(g);
  ComplexMatrix similar(l.rows(), l.cols());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      similar(i, j) = std::sqrt(d[i]) * l(i, j) / std::sqrt(d[j]);
  const double gap = max_abs_diff(sym_l, similar);
  r.measure("max|calL - D^1/2 L D^-1/2|", gap);
  r.require(gap <= kMatrixIdentityTolerance, "calL = D^1/2 L D^-1/2");

  const Spectrum s_sym = hermitian_eig(sym_l);
  const Spectrum s_l = general_eig_real_spectrum(l, d, true);
  r.measure("L_eigenvector_residual", s_l.max_residual);
  r.require(s_l.max_residual <= kSpectralTolerance * (1.0 + s_l.max_abs()), "L x = lambda x");
  r.require(spectra_match(s_sym.values, s_l.values), "spec(L) = spec(calL)");
  const double trace_gap = std::abs(std::accumulate(s_l.values.begin(), s_l.values.end(), 0.0) -
                                    l.trace().real());
  r.measure("trace_gap_L", trace_gap);
  r.require(trace_gap <= kSpectralTolerance * (1.0 + static_cast<double>(g.num_vertices())),
            "sum spec(L) = tr L");
  return r.finish();
}

CheckReport check_duality(const Hypergraph& g) {
  ReportBuilder r("duality", g, kMatrixIdentityTolerance);
  const Hypergraph gd = dual(g);
  const Hypergraph gdd = dual(gd);
  r.require(gdd == g, "dual(dual(G)) = G");
  const DegreeProfile p = degree_profile(g);
  const DegreeProfile pd = degree_profile(gd);
  r.require(pd.degrees == p.sizes && pd.sizes == p.degrees, "degrees and sizes swap");
  const double b_gap = max_abs_diff(incidence_matrix(gd), incidence_matrix(g).adjoint());
  const double k_gap = max_abs_diff(kirchhoff(gd), dual_kirchhoff(g));
  r.measure("max|B(G*) - B+|", b_gap);
  r.measure("max|K(G*) - K*(G)|", k_gap);
  r.require(b_gap <= kMatrixIdentityTolerance, "B(G*) = B(G)+");
  r.require(k_gap <= kMatrixIdentityTolerance, "K(G*) = K*(G)");
  return r.finish();
}

CheckReport check_solver_contract(const Hypergraph& g) {
  ReportBuilder r("solver_contract", g, kSpectralTolerance);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  std::vector<OperatorKind> kinds = {OperatorKind::A, OperatorKind::K, OperatorKind::Kstar};
  if (!has_zero_degree(g)) {
    kinds.push_back(OperatorKind::SymL);
    kinds.push_back(OperatorKind::Lstar);
    kinds.push_back(OperatorKind::L);
  }
  for (OperatorKind kind : kinds) {
    const std::string name = to_string(kind);
    const ComplexMatrix m = build_operator(kind, g);
    const Spectrum s = operator_spectrum(kind, g, true);
    const std::vector<ComplexVector>& xs = *s.vectors;
    r.require(std::is_sorted(s.values.begin(), s.values.end()), name + ": ascending");

    double worst_residual = 0.0;  // relative to (1 + |λ_i|)
    double worst_norm = 0.0;
    bool phases_ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      ComplexVector mx = m.apply(xs[i]);
      for (std::size_t j = 0; j < mx.size(); ++j) mx[j] -= s.values[i] * xs[i][j];
      worst_residual = std::max(worst_residual, norm2(mx) / (1.0 + std::abs(s.values[i])));
      worst_norm = std::max(worst_norm, std::abs(norm2(xs[i]) - 1.0));
      double top = 0.0;
      for (const Complex& z : xs[i]) top = std::max(top, std::abs(z));
      std::size_t pivot = 0;
      while (std::abs(xs[i][pivot]) < top * (1.0 - 1e-10)) ++pivot;
      phases_ok = phases_ok && xs[i][pivot].imag() == 0.0 && xs[i][pivot].real() >= 0.0;
    }
    r.measure(name + ".relative_residual", worst_residual);
    r.require(worst_residual <= kSpectralTolerance, name + ": residual <= 1e-8 (1+|lambda|)");
    r.require(worst_norm <= 1e-10, name + ": unit eigenvectors");
    r.require(phases_ok, name + ": phase normalization");

    const double sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    const double trace_gap = std::abs(sum - m.trace().real());
    r.measure(name + ".trace_gap", trace_gap);
    r.require(trace_gap <= 1e-9 * static_cast<double>(s.size()) * (1.0 + s.max_abs()),
              name + ": trace");

    if (kind != OperatorKind::L) {
      double worst_overlap = 0.0;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          worst_overlap = std::max(worst_overlap, std::abs(inner(xs[i], xs[j])));
      r.measure(name + ".max_overlap", worst_overlap);
      r.require(worst_overlap <= 1e-8, name + ": orthogonal eigenvectors");
    }
  }
  return r.finish();
}

// ---------------------------------------------------------------------------
// First properties

CheckReport check_trace_identities(const Hypergraph& g) {
  ReportBuilder r("trace_identities", g, kSpectralTolerance);
  const std::size_t n = g.num_vertices();
  if (n == 0) return r.skip(kEmptySkip);
  const DegreeProfile p = degree_profile(g);
  const double volume = static_cast<double>(std::accumulate(p.degrees.begin(), p.degrees.end(), std::size_t{0}));
  const double size_sum = static_cast<double>(std::accumulate(p.sizes.begin(), p.sizes.end(), std::size_t{0}));
  const auto sum = [](const Spectrum& s) { return std::accumulate(s.values.begin(), s.values.end(), 0.0); };

  const double sum_a = sum(operator_spectrum(OperatorKind::A, g));
  const double sum_k = sum(operator_spectrum(OperatorKind::K, g));
  const double sum_ks = sum(operator_spectrum(OperatorKind::Kstar, g));
  r.measure("sum_lambda_A", sum_a);
  r.measure("sum_lambda_K", sum_k);
  r.measure("sum_lambda_Kstar", sum_ks);
  r.measure("vol_V", volume);
  r.measure("sum_edge_sizes", size_sum);
  r.require(std::abs(sum_a) <= kSpectralTolerance, "sum spec(A) = 0");
  r.require(std::abs(sum_k - volume) <= kSpectralTolerance * (1.0 + volume), "sum spec(K) = vol V");
  r.require(std::abs(sum_ks - volume) <= kSpectralTolerance * (1.0 + volume), "sum spec(K*) = vol V");
  r.require(volume == size_sum, "vol V = sum |e|");

  if (has_zero_degree(g)) {
    r.measure("L_skipped", 1.0);
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    const double nn = static_cast<double>(n);
    const double sum_l = sum(operator_spectrum(OperatorKind::L, g));
    const double sum_ls = sum(operator_spectrum(OperatorKind::Lstar, g));
    r.measure("sum_lambda_L", sum_l);
    r.measure("sum_lambda_Lstar", sum_ls);
    r.require(std::abs(sum_l - nn) <= kSpectralTolerance * (1.0 + nn), "sum spec(L) = n");
    r.require(std::abs(sum_ls - nn) <= kSpectralTolerance * (1.0 + nn), "sum spec(L*) = n");
  }
  return r.finish();
}

CheckReport check_dual_spectra(const Hypergraph& g) {
  ReportBuilder r("dual_spectra", g, kSpectralTolerance);
  const std::size_t n = g.num_vertices();
  if (n == 0) return r.skip(kEmptySkip);
  const long n_minus_m = static_cast<long>(n) - static_cast<long>(g.num_edges());
  const NullityPolicy policy;
  r.measure("n_minus_m", static_cast<double>(n_minus_m));

  const auto compare = [&](const std::string& name, const std::vector<double>& x,
                           const std::vector<double>& xs) {
    std::vector<double> both = x;
    both.insert(both.end(), xs.begin(), xs.end());
    const double tau = policy.threshold(both);
    const std::vector<double> nz = nonzero_part(x, tau);
    const std::vector<double> nzs = nonzero_part(xs, tau);
    const std::size_t mu0 = x.size() - nz.size();
    const std::size_t mu0s = xs.size() - nzs.size();
    r.measure("nullity_" + name, static_cast<double>(mu0));
    r.measure("nullity_" + name + "star", static_cast<double>(mu0s));
    if (nz.size() == nzs.size()) r.measure("nonzero_gap_" + name, max_pointwise_gap(nz, nzs));
    r.require(spectra_match(nz, nzs), "nonzero spec(" + name + ") = nonzero spec(" + name + "*)");
    r.require(static_cast<long>(mu0) - static_cast<long>(mu0s) == n_minus_m,
              "mu0(" + name + ") - mu0(" + name + "*) = n - m");
    return std::pair{mu0, mu0s};
  };

  const auto [mu_k, mu_ks] = compare("K", operator_spectrum(OperatorKind::K, g).values,
                                     operator_spectrum(OperatorKind::Kstar, g).values);
  const double kd_gap = max_abs_diff(kirchhoff(dual(g)), dual_kirchhoff(g));
  r.measure("max|K(G*) - K*(G)|", kd_gap);
  r.require(kd_gap <= kMatrixIdentityTolerance, "K(G*) = K*(G)");

  if (has_zero_degree(g)) {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    const auto [mu_l, mu_ls] = compare("L", operator_spectrum(OperatorKind::L, g).values,
                                       operator_spectrum(OperatorKind::Lstar, g).values);
    r.require(mu_k == mu_l, "mu0(K) = mu0(L)");
    r.require(mu_ks == mu_ls, "mu0(K*) = mu0(L*)");
  }
  return r.finish();
}

CheckReport check_kernels(const Hypergraph& g) {
  ReportBuilder r("kernels", g, kSpectralTolerance);
  const std::size_t n = g.num_vertices();
  if (n == 0) return r.skip(kEmptySkip);
  const NullityPolicy policy;
  const Spectrum sk = operator_spectrum(OperatorKind::K, g, true);
  const Spectrum sks = operator_spectrum(OperatorKind::Kstar, g);
  const double tau_k = policy.threshold(sk.values);
  const std::size_t rank_b = sks.size() - nullity(sks.values, policy);
  const std::size_t mu_k = nullity(sk.values, policy);
  r.measure("nullity_K", static_cast<double>(mu_k));
  r.measure("rank_B", static_cast<double>(rank_b));
  r.require(mu_k + rank_b == n, "nullity(K) = n - rank(B)");

  const ComplexMatrix bt = incidence_matrix(g).adjoint();
  const bool with_l = !has_zero_degree(g);
  const ComplexMatrix l = with_l ? normalized(g) : ComplexMatrix();
  double worst_b = 0.0, worst_l = 0.0;
  for (std::size_t i = 0; i < sk.size(); ++i) {
    if (std::abs(sk.values[i]) > tau_k) continue;
    const ComplexVector& x = (*sk.vectors)[i];
    worst_b = std::max(worst_b, norm2(bt.apply(x)) / norm2(x));
    if (with_l) worst_l = std::max(worst_l, norm2(l.apply(x)) / norm2(x));
  }
  r.measure("max|B+x|/|x|", worst_b);
  r.require(worst_b <= kSpectralTolerance, "ker K in ker B+");
  if (with_l) {
    r.measure("max|Lx|/|x|", worst_l);
    r.require(worst_l <= kSpectralTolerance, "ker K in ker L");
    const std::size_t mu_l = nullity(operator_spectrum(OperatorKind::L, g).values, policy);
    r.measure("nullity_L", static_cast<double>(mu_l));
    r.require(mu_l == mu_k, "nullity(L) = nullity(K)");
  } else {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  }
  return r.finish();
}

CheckReport check_regular_equivalence(const Hypergraph& g) {
  ReportBuilder r("regular_equivalence", g, kSpectralTolerance);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  const DegreeProfile p = degree_profile(g);
  if (!p.is_regular) return r.skip("hypothesis not satisfied: not regular");
  if (p.max_degree == 0) return r.skip("hypothesis not satisfied: 0-regular, L undefined");
  const double d = static_cast<double>(p.max_degree);
  r.measure("d", d);
  const std::vector<double> k = operator_spectrum(OperatorKind::K, g).values;
  std::vector<double> k_over_d, d_minus_k;
  for (double x : k) {
    k_over_d.push_back(x / d);
    d_minus_k.push_back(d - x);
  }
  std::reverse(d_minus_k.begin(), d_minus_k.end());
  const std::vector<double> l = operator_spectrum(OperatorKind::L, g).values;
  const std::vector<double> a = operator_spectrum(OperatorKind::A, g).values;
  r.measure("max|spec(L) - spec(K)/d|", max_pointwise_gap(l, k_over_d));
  r.measure("max|spec(A) - (d - spec(K))|", max_pointwise_gap(a, d_minus_k));
  r.require(spectra_match(l, k_over_d), "spec(L) = spec(K)/d");
  r.require(spectra_match(a, d_minus_k), "spec(A) = d - spec(K)");
  return r.finish();
}

CheckReport check_regular_uniform_dual_L(const Hypergraph& g) {
  ReportBuilder r("regular_uniform_dual_L", g, kMatrixIdentityTolerance);
  const DegreeProfile p = degree_profile(g);
  if (g.num_vertices() == 0 || g.num_edges() == 0) return r.skip(kEmptySkip);
  if (!p.is_regular) return r.skip("hypothesis not satisfied: not regular");
  if (!p.is_uniform) return r.skip("hypothesis not satisfied: not uniform");
  if (p.max_degree == 0 || p.max_size == 0) {
    return r.skip("hypothesis not satisfied: degree or edge size 0");
  }
  const double ratio = static_cast<double>(p.max_degree) / static_cast<double>(p.max_size);
  r.measure("d_over_k", ratio);
  const Hypergraph gd = dual(g);
  const double gap1 = max_abs_diff(normalized(gd), dual_normalized(g).scaled(ratio));
  const double gap2 = max_abs_diff(dual_normalized(gd), normalized(g).scaled(ratio));
  r.measure("max|L(G*) - (d/k) L*(G)|", gap1);
  r.measure("max|L*(G*) - (d/k) L(G)|", gap2);
  r.require(gap1 <= kMatrixIdentityTolerance, "L(G*) = (d/k) L*(G)");
  r.require(gap2 <= kMatrixIdentityTolerance, "L*(G*) = (d/k) L(G)");
  return r.finish();
}

// ---------------------------------------------------------------------------
// Transformations

CheckReport check_vertex_deletion_interlacing(const Hypergraph& g, const std::set<std::size_t>& removed) {
  ReportBuilder r("vertex_deletion_interlacing", g, kSpectralTolerance, "S=" + set_string(removed));
  const VertexDeletion del = weak_delete_vertices(g, removed);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  if (removed.size() >= g.num_vertices()) return r.skip("precondition: |S| must be < n");
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (del.index_map[v]) keep.push_back(v);
  r.measure("r", static_cast<double>(removed.size()));

  const auto chain = [&](const std::string& name, const ComplexMatrix& full, const ComplexMatrix& sub) {
    const double defect = max_abs_diff(principal_submatrix(full, keep), sub);
    const double violation = interlacing_violation(hermitian_eig(full).values, hermitian_eig(sub).values);
    r.measure("submatrix_defect_" + name, defect);
    r.measure("max_violation_" + name, violation);
    r.require(defect <= kMatrixIdentityTolerance, name + "(G^) is a principal submatrix");
    r.require(violation <= kSpectralTolerance, name + " interlacing");
  };
  chain("A", adjacency_matrix(g), adjacency_matrix(del.graph));
  chain("K", kirchhoff(g), kirchhoff(del.graph));
  if (has_zero_degree(g) || has_zero_degree(del.graph)) {
    r.note("calL part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    chain("calL", sym_normalized(g), sym_normalized(del.graph));
  }
  return r.finish();
}

CheckReport check_edge_deletion_interlacing(const Hypergraph& g, const std::set<std::size_t>& removed) {
  ReportBuilder r("edge_deletion_interlacing", g, kSpectralTolerance, "F=" + set_string(removed));
  const Hypergraph reduced = weak_delete_edges(g, removed);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  const std::size_t rr = removed.size();
  const std::vector<double> full = operator_spectrum(OperatorKind::K, g).values;
  const std::vector<double> sub = operator_spectrum(OperatorKind::K, reduced).values;
  double upper = 0.0, lower = 0.0;
  for (std::size_t j = 0; j < full.size(); ++j) {
    upper = std::max(upper, sub[j] - full[j]);
    if (j >= rr) lower = std::max(lower, full[j - rr] - sub[j]);
  }
  r.measure("r", static_cast<double>(rr));
  r.measure("max_violation_upper", upper);
  r.measure("max_violation_lower", lower);
  r.require(upper <= kSpectralTolerance, "lambda_j(K(G^)) <= lambda_j(K(G))");
  r.require(lower <= kSpectralTolerance, "lambda_{j-r}(K(G)) <= lambda_j(K(G^))");
  r.note("stated range j in {r-1,...,n}; upper chain checked for j=1..n, lower for j=r+1..n");
  return r.finish();
}

CheckReport check_switching(const Hypergraph& g, const std::vector<SwitchingFunction>& switchings) {
  std::string extra;
  for (const SwitchingFunction& f : switchings) {
    extra += f.kind == SwitchingFunction::Kind::Vertex ? "v[" : "e[";
    char buffer[64];
    for (const Phase& z : f.values) {
      std::snprintf(buffer, sizeof buffer, "%a,%a;", z.re(), z.im());
      extra += buffer;
    }
    extra += "]";
  }
  ReportBuilder r("switching", g, kMatrixIdentityTolerance, extra);

  std::vector<Phase> dn(g.num_vertices()), dm(g.num_edges());
  Hypergraph switched = g;
  for (const SwitchingFunction& f : switchings) {
    switched = apply_switching(switched, f);
    std::vector<Phase>& total = f.kind == SwitchingFunction::Kind::Vertex ? dn : dm;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] = total[i] * f.values[i];
  }
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  ComplexVector zn, zm;
  for (const Phase& z : dn) zn.push_back(z.value());
  for (const Phase& z : dm) zm.push_back(z.value());
  const ComplexVector ones_n(zn.size(), 1.0), ones_m(zm.size(), 1.0);

  const auto identity = [&](const std::string& name, const ComplexMatrix& actual, const ComplexMatrix& expected) {
    const double gap = max_abs_diff(actual, expected);
    r.measure("max_gap_" + name, gap);
    r.require(gap <= kMatrixIdentityTolerance, name + " switching identity");
  };
  // B(G') = Dn⁺ B Dm⁺; vertex-side operators conjugate by Dn, edge-side by Dm.
  identity("B", incidence_matrix(switched), conjugate_by(incidence_matrix(g), zn, conj_all(zm)));
  identity("A", adjacency_matrix(switched), conjugate_by(adjacency_matrix(g), zn, zn));
  identity("K", kirchhoff(switched), conjugate_by(kirchhoff(g), zn, zn));
  identity("Kstar", dual_kirchhoff(switched), conjugate_by(dual_kirchhoff(g), conj_all(zm), conj_all(zm)));

  std::vector<OperatorKind> kinds = {OperatorKind::A, OperatorKind::K, OperatorKind::Kstar};
  if (has_zero_degree(g)) {
    r.note("L and L* parts skipped: " + std::string(kZeroDegreeSkip));
  } else {
    identity("L", normalized(switched), conjugate_by(normalized(g), zn, zn));
    identity("Lstar", dual_normalized(switched), conjugate_by(dual_normalized(g), conj_all(zm), conj_all(zm)));
    kinds.push_back(OperatorKind::L);
    kinds.push_back(OperatorKind::Lstar);
  }
  for (OperatorKind kind : kinds) {
    const std::string name = to_string(kind);
    const std::vector<double> before = operator_spectrum(kind, g).values;
    const std::vector<double> after = operator_spectrum(kind, switched).values;
    r.measure("spectrum_gap_" + name, max_pointwise_gap(before, after));
    r.require(spectra_match(before, after), name + " cospectral");
  }
  return r.finish();
}

CheckReport check_switching(const Hypergraph& g, const SwitchingFunction& f) {
  return check_switching(g, std::vector<SwitchingFunction>{f});
}

// ---------------------------------------------------------------------------
// Extremal eigenvalues

bool BoundReport::all_ok() const noexcept {
  return rho_ok && k_chain_ok && l_chain_ok && max_ok && gershgorin_ok && k_equality.consistent() &&
         (!l_equality || l_equality->consistent());
}

BoundReport bound_report(const Hypergraph& g) {
  BoundReport b;
  const DegreeProfile p = degree_profile(g);
  b.delta = p.max_degree;
  b.nabla = p.max_size;
  const double delta = static_cast<double>(b.delta);
  const double nabla = static_cast<double>(b.nabla);
  b.bound_rho = delta * (nabla - 1.0);
  b.bound_K = nabla * delta;
  b.bound_L = nabla;
  b.bound_max = std::max(delta, nabla);

  const Hypergraph gu = underlying(g);
  const ComplexMatrix a = adjacency_matrix(g);
  b.rho_A = spectral_radius(hermitian_eig(a));
  b.gershgorin_A = gershgorin_bound(a);
  b.lambda_max_K = largest(operator_spectrum(OperatorKind::K, g).values);
  b.lambda_max_K_underlying = largest(operator_spectrum(OperatorKind::K, gu).values);

  constexpr double slack = kSpectralTolerance;
  b.rho_ok = b.rho_A <= b.bound_rho + slack;
  b.gershgorin_ok = b.rho_A <= b.gershgorin_A + slack && b.gershgorin_A <= b.bound_rho + slack;
  b.k_chain_ok = b.lambda_max_K <= b.lambda_max_K_underlying + slack &&
                 b.lambda_max_K_underlying <= b.bound_K + slack;
  b.max_ok = g.num_vertices() == 0 || b.bound_max <= b.lambda_max_K + slack;

  b.k_equality.holds = std::abs(b.lambda_max_K_underlying - b.bound_K) <= slack;
  b.k_equality.hypothesis = p.is_regular && p.is_uniform;
  b.k_equality.component_predicted = component_attains(g, true);
  b.k_equality.without_hypothesis = b.k_equality.holds && !b.k_equality.hypothesis;

  b.l_chain_ok = true;
  if (g.num_vertices() > 0 && !has_zero_degree(g)) {
    b.lambda_max_L = largest(operator_spectrum(OperatorKind::L, g).values);
    b.lambda_max_L_underlying = largest(operator_spectrum(OperatorKind::L, gu).values);
    b.l_chain_ok = *b.lambda_max_L <= *b.lambda_max_L_underlying + slack &&
                   *b.lambda_max_L_underlying <= b.bound_L + slack;
    EqualityAnalysis eq;
    eq.holds = std::abs(*b.lambda_max_L_underlying - b.bound_L) <= slack;
    eq.hypothesis = p.is_uniform;
    eq.component_predicted = component_attains(g, false);
    eq.without_hypothesis = eq.holds && !eq.hypothesis;
    b.l_equality = eq;
  }
  if (g.num_vertices() <= kIndependenceMaxVertices) b.alpha = independence_number(g).alpha;
  return b;
}

CheckReport check_bounds(const Hypergraph& g) {
  ReportBuilder r("bounds", g, kSpectralTolerance);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  const BoundReport b = bound_report(g);
  r.measure("delta", static_cast<double>(b.delta));
  r.measure("nabla", static_cast<double>(b.nabla));
  r.require_le("rho_A<=delta(nabla-1)", b.rho_A, b.bound_rho, kSpectralTolerance);
  r.measure("gershgorin_A", b.gershgorin_A);
  r.require(b.gershgorin_ok, "rho_A <= gershgorin(A) <= delta(nabla-1)");
  r.require_le("lambda_n(K)<=lambda_n(K(G'))", b.lambda_max_K, b.lambda_max_K_underlying, kSpectralTolerance);
  r.require_le("lambda_n(K(G'))<=nabla*delta", b.lambda_max_K_underlying, b.bound_K, kSpectralTolerance);
  r.require_le("max{delta,nabla}<=lambda_n(K)", b.bound_max, b.lambda_max_K, kSpectralTolerance);
  r.measure("k_equality_holds", b.k_equality.holds);
  r.measure("regular_and_uniform", b.k_equality.hypothesis);
  r.measure("k_equality_component_predicted", b.k_equality.component_predicted);
  r.measure("k_equality_without_regular_uniform", b.k_equality.without_hypothesis);
  r.require(b.k_equality.consistent(), "K equality condition");
  if (b.k_equality.without_hypothesis) {
    r.note("flag: lambda_n(K(G')) = nabla*delta on a non-regular or non-uniform hypergraph");
  }
  if (b.l_equality) {
    r.require_le("lambda_n(L)<=lambda_n(L(G'))", *b.lambda_max_L, *b.lambda_max_L_underlying, kSpectralTolerance);
    r.require_le("lambda_n(L(G'))<=nabla", *b.lambda_max_L_underlying, b.bound_L, kSpectralTolerance);
    r.measure("l_equality_holds", b.l_equality->holds);
    r.measure("uniform", b.l_equality->hypothesis);
    r.measure("l_equality_component_predicted", b.l_equality->component_predicted);
    r.measure("l_equality_without_uniform", b.l_equality->without_hypothesis);
    r.require(b.l_equality->consistent(), "L equality condition");
    if (b.l_equality->without_hypothesis) {
      r.note("flag: lambda_n(L(G')) = nabla on a non-uniform hypergraph");
    }
  } else {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  }
  if (b.alpha) r.measure("alpha", static_cast<double>(*b.alpha));
  return r.finish();
}

CheckReport check_constant_phase_set(const Hypergraph& g, const std::set<std::size_t>& subset) {
  ReportBuilder r("constant_phase_set", g, kSpectralTolerance, "S=" + set_string(subset));
  if (!subset.empty() && *subset.rbegin() >= g.num_vertices()) {
    throw Error(ErrorCode::BadVertexIndex, "vertex " + std::to_string(*subset.rbegin()) + " out of range");
  }
  if (subset.empty()) return r.skip("precondition: S must be nonempty");
  ComplexVector x(g.num_vertices());
  for (std::size_t v : subset) {
    Phase w;
    if (!has_constant_phase(g, v, &w)) {
      return r.skip("hypothesis not satisfied: vertex " + std::to_string(v) + " has non-constant phase");
    }
    x[v] = w.value();
  }
  double numerator = 0.0;
  for (const Edge& edge : g.edges()) {
    const auto hits = std::count_if(edge.begin(), edge.end(),
                                    [&](const auto& inc) { return subset.contains(inc.first); });
    numerator += static_cast<double>(hits * hits);
  }
  const double size = static_cast<double>(subset.size());
  const double value_k = numerator / size;
  const std::vector<double> k = operator_spectrum(OperatorKind::K, g).values;
  r.measure("sum|e cap S|^2", numerator);
  r.measure("rq_K_gap", std::abs(rayleigh(RayleighKind::K, g, x) - value_k));
  r.require(std::abs(rayleigh(RayleighKind::K, g, x) - value_k) <= kRayleighTolerance * (1.0 + value_k),
            "RQ_K(x_S) = sum|e cap S|^2 / |S|");
  r.require_le("lambda_1(K)<=value_K", smallest(k), value_k, kSpectralTolerance);
  r.require_le("value_K<=lambda_n(K)", value_k, largest(k), kSpectralTolerance);

  if (has_zero_degree(g)) {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    const DegreeProfile p = degree_profile(g);
    double volume = 0.0;
    for (std::size_t v : subset) volume += static_cast<double>(p.degrees[v]);
    const double value_l = numerator / volume;
    const std::vector<double> l = operator_spectrum(OperatorKind::L, g).values;
    r.measure("vol_S", volume);
    const double rq_gap = std::abs(rayleigh(RayleighKind::L, g, x) - value_l);
    r.measure("rq_L_gap", rq_gap);
    r.require(rq_gap <= kRayleighTolerance * (1.0 + value_l), "RQ_L(x_S) = sum|e cap S|^2 / vol S");
    r.require_le("lambda_1(L)<=value_L", smallest(l), value_l, kSpectralTolerance);
    r.require_le("value_L<=lambda_n(L)", value_l, largest(l), kSpectralTolerance);
  }
  return r.finish();
}

CheckReport check_independence_bounds(const Hypergraph& g) {
  ReportBuilder r("independence_bounds", g, kSpectralTolerance);
  const IndependentSet S = independence_number(g);
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  const DegreeProfile p = degree_profile(g);
  double volume = 0.0;
  for (std::size_t v : S.witness) volume += static_cast<double>(p.degrees[v]);
  const double alpha = static_cast<double>(S.alpha);
  r.measure("alpha", alpha);
  const std::vector<double> k = operator_spectrum(OperatorKind::K, g).values;
  r.require_le("volS/|S|<=lambda_n(K)", volume / alpha, largest(k), kSpectralTolerance);

  const auto count_bound = [&](const std::string& name, const std::vector<double>& values, double pivot) {
    const auto below = std::count_if(values.begin(), values.end(),
                                     [&](double x) { return x <= pivot + kSpectralTolerance; });
    const auto above = std::count_if(values.begin(), values.end(),
                                     [&](double x) { return x >= pivot - kSpectralTolerance; });
    const double bound = static_cast<double>(std::min(below, above));
    r.measure("count_bound_" + name, bound);
    r.require(alpha <= bound, "alpha <= min #{" + name + " <= c}, #{" + name + " >= c}");
  };
  count_bound("A", operator_spectrum(OperatorKind::A, g).values, 0.0);
  if (has_zero_degree(g)) {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    count_bound("L", operator_spectrum(OperatorKind::L, g).values, 1.0);
  }
  return r.finish();
}

CheckReport check_rayleigh_extremality(const Hypergraph& g, std::uint64_t seed, int samples) {
  ReportBuilder r("rayleigh_extremality", g, kRayleighTolerance, "seed=" + std::to_string(seed));
  if (g.num_vertices() == 0) return r.skip(kEmptySkip);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<RayleighKind, OperatorKind>> kinds = {{RayleighKind::A, OperatorKind::A},
                                                              {RayleighKind::K, OperatorKind::K}};
  if (has_zero_degree(g)) {
    r.note("L part skipped: " + std::string(kZeroDegreeSkip));
  } else {
    kinds.emplace_back(RayleighKind::L, OperatorKind::L);
  }
  for (const auto& [rq_kind, op] : kinds) {
    const std::string name = to_string(op);
    const Spectrum s = operator_spectrum(op, g, true);
    double low = std::numeric_limits<double>::infinity();
    double high = -low;
    for (int t = 0; t < samples; ++t) {
      const double q = rayleigh(rq_kind, g, random_vector(rng, g.num_vertices(), true));
      low = std::min(low, q);
      high = std::max(high, q);
    }
    r.measure(name + ".min_rq_minus_lambda_1", low - s.min());
    r.measure(name + ".lambda_n_minus_max_rq", s.max() - high);
    r.require(low >= s.min() - kRayleighTolerance, name + ": RQ >= lambda_1");
    r.require(high <= s.max() + kRayleighTolerance, name + ": RQ <= lambda_n");
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
      worst = std::max(worst, std::abs(rayleigh(rq_kind, g, (*s.vectors)[i]) - s.values[i]));
    r.measure(name + ".max_eigvec_rq_gap", worst);
    r.require(worst <= kSpectralTolerance, name + ": RQ at eigenvectors");
  }
  return r.finish();
}

// ---------------------------------------------------------------------------

CheckReport merge_reports(const std::string& name, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check_name = name;
  std::string digests;
  std::map<std::string, double> worst;
  std::vector<std::string> order;
  std::size_t active = 0;
  for (const CheckReport& part : parts) {
    digests += part.inputs_digest;
    out.tolerance = std::max(out.tolerance, part.tolerance);
    if (part.skipped()) continue;
    ++active;
    for (const Measurement& m : part.measured) {
      auto [it, inserted] = worst.emplace(m.label, m.value);
      if (inserted) order.push_back(m.label);
      else it->second = std::max(it->second, m.value);
    }
    for (const std::string& f : part.failures) out.failures.push_back(part.inputs_digest + ": " + f);
    if (!part.detail.empty() && out.detail.find(part.detail) == std::string::npos) {
      out.detail += (out.detail.empty() ? "" : "; ") + part.detail;
    }
  }
  for (const std::string& label : order) out.measured.push_back({label, worst[label]});
  out.measured.push_back({"samples", static_cast<double>(parts.size())});
  out.measured.push_back({"samples_skipped", static_cast<double>(parts.size() - active)});
  // Hash of the concatenated part digests.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : digests) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%016" PRIx64, hash);
  out.inputs_digest = buffer;
  if (active == 0) {
    out.verdict = Verdict::Skipped;
    out.skip_reason = parts.empty() ? "no samples" : parts.front().skip_reason;
  } else {
    out.verdict = out.failures.empty() ? Verdict::Pass : Verdict::Fail;
  }
  return out;
}

SuiteResult run_full_suite(const Hypergraph& g, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<CheckReport> reports;

  reports.push_back(check_laplacian_factorization(g));
  reports.push_back(check_quadratic_forms(g, rng(), options.quadratic_samples));
  reports.push_back(check_sym_similarity(g));
  reports.push_back(check_duality(g));
  reports.push_back(check_solver_contract(g));
  reports.push_back(check_trace_identities(g));
  reports.push_back(check_dual_spectra(g));
  reports.push_back(check_kernels(g));
  reports.push_back(check_regular_equivalence(g));
  reports.push_back(check_regular_uniform_dual_L(g));

  {
    std::vector<CheckReport> parts{check_vertex_deletion_interlacing(g, {})};
    for (std::size_t v = 0; n >= 2 && v < n; ++v) parts.push_back(check_vertex_deletion_interlacing(g, {v}));
    for (int t = 0; n >= 3 && t < options.sampled_deletions; ++t) {
      const std::size_t r = std::uniform_int_distribution<std::size_t>(2, n - 1)(rng);
      parts.push_back(check_vertex_deletion_interlacing(g, random_subset(rng, n, r)));
    }
    reports.push_back(merge_reports("vertex_deletion_interlacing", parts));
  }
  {
    std::vector<CheckReport> parts{check_edge_deletion_interlacing(g, {})};
    for (std::size_t e = 0; e < m; ++e) parts.push_back(check_edge_deletion_interlacing(g, {e}));
    for (int t = 0; m >= 2 && t < options.sampled_deletions; ++t) {
      const std::size_t r = std::uniform_int_distribution<std::size_t>(2, m)(rng);
      parts.push_back(check_edge_deletion_interlacing(g, random_subset(rng, m, r)));
    }
    reports.push_back(merge_reports("edge_deletion_interlacing", parts));
  }
  {
    const SwitchingFunction zeta = random_switching(rng, SwitchingFunction::Kind::Vertex, n);
    const SwitchingFunction xi = random_switching(rng, SwitchingFunction::Kind::Edge, m);
    reports.push_back(merge_reports(
        "switching", {check_switching(g, zeta), check_switching(g, xi), check_switching(g, {zeta, xi})}));
  }

  reports.push_back(check_bounds(g));
  {
    std::set<std::size_t> constant, top;
    const DegreeProfile p = degree_profile(g);
    for (std::size_t v = 0; v < n; ++v)
      if (has_constant_phase(g, v, nullptr)) constant.insert(v);
    if (n > 0) {
      top.insert(static_cast<std::size_t>(
          std::max_element(p.degrees.begin(), p.degrees.end()) - p.degrees.begin()));
    }
    std::vector<CheckReport> parts{check_constant_phase_set(g, constant), check_constant_phase_set(g, top)};
    if (n > 0 && n <= kIndependenceMaxVertices) {
      const IndependentSet S = independence_number(g);
      parts.push_back(check_constant_phase_set(g, {S.witness.begin(), S.witness.end()}));
    }
    reports.push_back(merge_reports("constant_phase_set", parts));
  }
  if (n <= kIndependenceMaxVertices) {
    reports.push_back(check_independence_bounds(g));
  } else {
    ReportBuilder r("independence_bounds", g, kSpectralTolerance);
    reports.push_back(r.skip("too large for brute-force independence number"));
  }
  reports.push_back(check_rayleigh_extremality(g, rng(), options.rayleigh_samples));

  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check_name < b.check_name; });
  SuiteResult result;
  for (const CheckReport& rep : reports) {
    if (rep.passed()) ++result.passed;
    else if (rep.failed()) ++result.failed;
    else ++result.skipped;
  }
  result.reports = std::move(reports);
  return result;
}

}  // namespace cuh
