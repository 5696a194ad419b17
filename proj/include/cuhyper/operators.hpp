#pragma once

// Matrices attached to a complex unit hypergraph. Each is built from its
// defining formula; the identities relating them (K = BB⁺, ...) are checked
// separately rather than used as construction shortcuts.

#include <vector>

#include "cuhyper/hypergraph.hpp"
#include "cuhyper/matrix.hpp"

namespace cuh {

enum class OperatorKind { A, K, Kstar, L, Lstar, SymL };

const char* to_string(OperatorKind kind);

ComplexMatrix degree_matrix(const Hypergraph& g);     // D
ComplexMatrix incidence_matrix(const Hypergraph& g);  // B, n x m
ComplexMatrix adjacency_matrix(const Hypergraph& g);  // A, a_ij = Σ_e φ_e(v_i, v_j)
ComplexMatrix kirchhoff(const Hypergraph& g);         // K = D - A
ComplexMatrix dual_kirchhoff(const Hypergraph& g);    // K* = B⁺B

// The normalized operators need D^{-1}; they throw ZeroDegreeVertex listing
// every vertex of degree zero.
ComplexMatrix normalized(const Hypergraph& g);       // L = Id - D⁻¹A (not Hermitian)
ComplexMatrix sym_normalized(const Hypergraph& g);   // 𝓛 = Id - D^{-1/2} A D^{-1/2}
ComplexMatrix dual_normalized(const Hypergraph& g);  // L* = B⁺D⁻¹B

ComplexMatrix build_operator(OperatorKind kind, const Hypergraph& g);

/// Vertices of degree zero, ascending.
std::vector<std::size_t> zero_degree_vertices(const Hypergraph& g);
bool has_zero_degree(const Hypergraph& g);

/// diag(values) of a switching function, D_n(ζ) or D_m(ξ).
ComplexMatrix switching_diagonal(const SwitchingFunction& f);

}  // namespace cuh
