#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cuhyper/hypergraph.hpp"
#include "cuhyper/matrix.hpp"
#include "cuhyper/operators.hpp"

namespace cuh {

/// Ascending real eigenvalues, optionally with unit eigenvectors aligned to
/// them. Each vector is phase-normalized: its first component of largest
/// modulus is real and nonnegative.
struct Spectrum {
  std::vector<double> values;
  std::optional<std::vector<ComplexVector>> vectors;
  double max_residual = 0.0;  // max_i ‖M x_i - λ_i x_i‖₂

  std::size_t size() const noexcept { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double max_abs() const noexcept;
};

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-13;  // relative to ‖M‖_F
  int max_sweeps = 60;
};

inline constexpr double kSolverHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi. Throws NotSquare, NotHermitian (defect > 1e-10) or
/// NoConvergence. Residuals are always measured; `want_vectors` only decides
/// whether the vectors are kept.
Spectrum hermitian_eig(const ComplexMatrix& m, bool want_vectors = false,
                       const JacobiOptions& options = {});

/// Spectrum of M = D^{-1/2} H D^{1/2} for Hermitian H (the normalized
/// Laplacian with d = degrees). Solves the Hermitian similar matrix
/// D^{1/2} M D^{-1/2}; eigenvectors are mapped back with D^{-1/2} and scaled
/// to unit norm, so M x = λ x. Throws NonPositiveDiagonal.
Spectrum general_eig_real_spectrum(const ComplexMatrix& m, std::span<const double> d,
                                   bool want_vectors = true);

/// Spectrum of one of the hypergraph operators. L goes through 𝓛.
Spectrum operator_spectrum(OperatorKind kind, const Hypergraph& g, bool want_vectors = false);

struct NullityPolicy {
  double absolute_floor = 1e-10;
  double relative_factor = 1e-9;

  double threshold(std::span<const double> values) const;
};

std::size_t nullity(std::span<const double> values, const NullityPolicy& policy = {});
std::size_t nullity(const ComplexMatrix& m, const NullityPolicy& policy = {});

double spectral_radius(const Spectrum& s);

enum class RayleighKind { A, K, L };

/// RQ_K and RQ_L use the edge-sum form Σ_e |Σ_{v_j∈e} ω(v_j,e)⁻¹ x_j|², with
/// denominators x⁺x and Σ deg(v_i)|x_i|² respectively. RQ_A is x⁺Ax / x⁺x.
/// Throws ZeroVector, ZeroDegreeVertex (kind L), LengthMismatch.
double rayleigh(RayleighKind kind, const Hypergraph& g, std::span<const Complex> x);

/// max_i (|m_ii| + Σ_{j≠i} |m_ij|); 0 for an empty matrix.
double gershgorin_bound(const ComplexMatrix& m);

}  // namespace cuh
