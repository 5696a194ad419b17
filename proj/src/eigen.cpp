#include "cuhyper/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cuhyper/error.hpp"

namespace cuh {

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) sum += std::norm(h(i, j));
  return std::sqrt(sum);
}

// Zeroes h(p,q) with the plane unitary U = diag(1, conj(e)) * [[c, s], [-s, c]]
// where e = h(p,q)/|h(p,q)|, and accumulates V <- V U.
void rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex hpq = h(p, q);
  const double magnitude = std::abs(hpq);
  const Complex e = hpq / magnitude;
  const double theta = (h(q, q).real() - h(p, p).real()) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c, upq = s;
  const Complex uqp = -s * std::conj(e), uqq = c * std::conj(e);

  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex hkp = h(k, p), hkq = h(k, q);
    h(k, p) = hkp * upp + hkq * uqp;
    h(k, q) = hkp * upq + hkq * uqq;
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex hpk = h(p, k), hqk = h(q, k);
    h(p, k) = std::conj(upp) * hpk + std::conj(uqp) * hqk;
    h(q, k) = std::conj(upq) * hpk + std::conj(uqq) * hqk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

void normalize_phase(ComplexVector& x) {
  const double length = norm2(x);
  if (length == 0.0) return;
  for (Complex& z : x) z /= length;
  double largest = 0.0;
  for (const Complex& z : x) largest = std::max(largest, std::abs(z));
  // Near-ties resolve to the first index so output does not flip on round-off.
  std::size_t pivot = 0;
  while (std::abs(x[pivot]) < largest * (1.0 - 1e-10)) ++pivot;
  const Complex rotation = std::conj(x[pivot]) / std::abs(x[pivot]);
  for (Complex& z : x) z *= rotation;
  x[pivot] = std::abs(x[pivot]);
}

double residual(const ComplexMatrix& m, double lambda, std::span<const Complex> x) {
  ComplexVector r = m.apply(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lambda * x[i];
  return norm2(r);
}

}  // namespace

double Spectrum::max_abs() const noexcept {
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

Spectrum hermitian_eig(const ComplexMatrix& m, bool want_vectors, const JacobiOptions& options) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigensolver needs a square matrix");
  if (const double defect = m.hermitian_defect(); defect > kSolverHermitianTolerance) {
    throw Error(ErrorCode::NotHermitian, "Hermitian defect " + std::to_string(defect));
  }
  const std::size_t n = m.rows();
  ComplexMatrix h = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = m.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(h) <= options.off_diagonal_tolerance * scale) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (h(p, q) != Complex{}) rotate(h, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() < h(b, b).real(); });

  Spectrum out;
  out.values.reserve(n);
  std::vector<ComplexVector> vectors;
  vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(h(k, k).real());
    ComplexVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = v(i, k);
    normalize_phase(x);
    out.max_residual = std::max(out.max_residual, residual(m, out.values.back(), x));
    vectors.push_back(std::move(x));
  }
  if (want_vectors) out.vectors = std::move(vectors);
  return out;
}

Spectrum general_eig_real_spectrum(const ComplexMatrix& m, std::span<const double> d,
                                   bool want_vectors) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigensolver needs a square matrix");
  if (d.size() != m.rows()) {
    throw Error(ErrorCode::LengthMismatch, "diagonal length does not match the matrix");
  }
  std::vector<double> root(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      throw Error(ErrorCode::NonPositiveDiagonal, "diagonal entry " + std::to_string(i) +
                                                      " is not positive");
    }
    root[i] = std::sqrt(d[i]);
  }
  const std::size_t n = m.rows();
  ComplexMatrix similar(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) similar(i, j) = m(i, j) * (root[i] / root[j]);

  Spectrum sym = hermitian_eig(similar, true);
  Spectrum out;
  out.values = sym.values;
  std::vector<ComplexVector> vectors;
  vectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexVector x = (*sym.vectors)[k];
    for (std::size_t i = 0; i < n; ++i) x[i] /= root[i];
    normalize_phase(x);
    out.max_residual = std::max(out.max_residual, residual(m, out.values[k], x));
    vectors.push_back(std::move(x));
  }
  if (want_vectors) out.vectors = std::move(vectors);
  return out;
}

Spectrum operator_spectrum(OperatorKind kind, const Hypergraph& g, bool want_vectors) {
  if (kind == OperatorKind::L) {
    const DegreeProfile profile = degree_profile(g);
    const std::vector<double> d(profile.degrees.begin(), profile.degrees.end());
    return general_eig_real_spectrum(normalized(g), d, want_vectors);
  }
  return hermitian_eig(build_operator(kind, g), want_vectors);
}

double NullityPolicy::threshold(std::span<const double> values) const {
  double largest = 0.0;
  for (double x : values) largest = std::max(largest, std::abs(x));
  return std::max(absolute_floor, relative_factor * largest);
}

std::size_t nullity(std::span<const double> values, const NullityPolicy& policy) {
  const double tau = policy.threshold(values);
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [tau](double x) { return std::abs(x) <= tau; }));
}

std::size_t nullity(const ComplexMatrix& m, const NullityPolicy& policy) {
  return nullity(hermitian_eig(m).values, policy);
}

double spectral_radius(const Spectrum& s) { return s.max_abs(); }

double rayleigh(RayleighKind kind, const Hypergraph& g, std::span<const Complex> x) {
  if (x.size() != g.num_vertices()) {
    throw Error(ErrorCode::LengthMismatch, "vector length does not match vertex count");
  }
  const double mass = std::pow(norm2(x), 2);
  if (mass == 0.0) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");

  if (kind == RayleighKind::A) {
    const ComplexVector ax = adjacency_matrix(g).apply(x);
    const Complex q = inner(x, ax) / mass;
    if (std::abs(q.imag()) > 1e-9 * (1.0 + std::abs(q.real()))) {
      throw Error(ErrorCode::NotHermitian,
                  "x⁺Ax has imaginary part " + std::to_string(q.imag()));
    }
    return q.real();
  }

  double numerator = 0.0;
  for (const Edge& edge : g.edges()) {
    Complex sum{};
    for (const auto& [v, phase] : edge) sum += phase.inverse().value() * x[v];
    numerator += std::norm(sum);
  }
  if (kind == RayleighKind::K) return numerator / mass;

  if (const auto zeros = zero_degree_vertices(g); !zeros.empty()) {
    throw Error(ErrorCode::ZeroDegreeVertex, "RQ_L needs positive degrees", {}, zeros);
  }
  const DegreeProfile profile = degree_profile(g);
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    weighted += static_cast<double>(profile.degrees[i]) * std::norm(x[i]);
  return numerator / weighted;
}

double gershgorin_bound(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "Geršgorin bound needs a square matrix");
  double bound = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    bound = std::max(bound, row);
  }
  return bound;
}

}  // namespace cuh
