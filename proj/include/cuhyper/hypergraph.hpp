#pragma once

// Complex unit hypergraphs: every vertex-edge incidence carries a phase of
// modulus one. Absence of an incidence is the zero phase and is never stored.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cuh {

using Complex = std::complex<double>;

/// A complex number of unit modulus.
class Phase {
 public:
  /// The identity phase 1.
  Phase() = default;
  /// Throws NonUnitPhase when | |re + i im| - 1 | > 1e-9.
  Phase(double re, double im);
  explicit Phase(Complex z) : Phase(z.real(), z.imag()) {}

  static Phase from_angle(double theta);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

  /// For a unit complex number the inverse is the conjugate.
  Phase inverse() const noexcept;
  Phase operator*(const Phase& other) const noexcept;

  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  struct Unchecked {};
  Phase(Unchecked, double re, double im) noexcept;

  double re_ = 1.0;
  double im_ = 0.0;
};

inline constexpr double kUnitModulusTolerance = 1e-9;

/// An edge maps each incident vertex to its phase; keys are sorted.
using Edge = std::map<std::size_t, Phase>;

struct RawIncidence {
  std::size_t vertex;
  double re;
  double im;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws BadVertexIndex when an edge references a vertex >= n.
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  /// Validating constructor from raw triples, one inner list per edge.
  /// Errors carry the location "edges[i][j]" of the offending record.
  static Hypergraph build(std::size_t n,
                          const std::vector<std::vector<RawIncidence>>& raw_edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_incidences() const noexcept;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const;

  std::optional<Phase> phase(std::size_t v, std::size_t e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> sizes;
  std::size_t max_degree = 0;  // Δ
  std::size_t max_size = 0;    // ∇
  bool is_regular = false;
  bool is_uniform = false;
};

/// Vacuous regularity/uniformity holds for no vertices/no edges.
DegreeProfile degree_profile(const Hypergraph& g);

/// φ_e(v_i, v_j) = -ω(v_i, e) ω(v_j, e)^{-1}. Throws NotAdjacentInEdge unless
/// i != j and both are incident to e.
Phase adjacency_gain(const Hypergraph& g, std::size_t e, std::size_t i, std::size_t j);

/// Connected components over vertices, joined through shared edges.
/// Returns the component id of every vertex, ids numbered by first vertex.
std::vector<std::size_t> vertex_components(const Hypergraph& g);

// ---------------------------------------------------------------------------
// Transformations

Hypergraph dual(const Hypergraph& g);
Hypergraph underlying(const Hypergraph& g);

struct VertexDeletion {
  Hypergraph graph;
  /// old vertex index -> new index, nullopt for deleted vertices.
  std::vector<std::optional<std::size_t>> index_map;
};

/// Weak vertex deletion: drops the incidences of `removed`, keeps every edge
/// (possibly empty) and compacts the remaining vertex indices.
VertexDeletion weak_delete_vertices(const Hypergraph& g, const std::set<std::size_t>& removed);

/// Weak edge deletion: drops the listed columns; vertices are unchanged.
Hypergraph weak_delete_edges(const Hypergraph& g, const std::set<std::size_t>& removed);

struct SwitchingFunction {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  std::vector<Phase> values;

  /// Pointwise inverse.
  SwitchingFunction inverse() const;
};

/// ω^ζ(v,e) = ζ(v)^{-1} ω(v,e) and ω^ξ(v,e) = ξ(e)^{-1} ω(v,e).
/// Throws LengthMismatch when the function does not fit the hypergraph.
Hypergraph apply_switching(const Hypergraph& g, const SwitchingFunction& f);

// ---------------------------------------------------------------------------
// Generators

enum class PhaseMode { Continuous, RootsOfUnity };

struct RandomOptions {
  std::size_t n = 1;
  std::size_t m = 1;
  double p = 0.5;
  PhaseMode mode = PhaseMode::Continuous;
  std::size_t k = 2;  // used in RootsOfUnity mode
  std::uint64_t seed = 0;
};

struct GeneratedHypergraph {
  Hypergraph graph;
  /// Set when an edge stayed empty after the resampling budget.
  bool empty_edge_warning = false;
};

inline constexpr int kEmptyEdgeResamples = 100;

/// Throws BadParameter for p outside (0,1], k == 0 or n == 0.
GeneratedHypergraph gen_random(const RandomOptions& options);

/// One edge containing all n vertices with phase 1 (n >= 1).
Hypergraph gen_single_edge_all_ones(std::size_t n);

// ---------------------------------------------------------------------------
// Independence

inline constexpr std::size_t kIndependenceMaxVertices = 24;

struct IndependentSet {
  std::size_t alpha = 0;
  std::vector<std::size_t> witness;  // sorted
};

/// S is independent iff |S ∩ e| <= 1 for every edge. Brute force over all
/// subsets; ties go to the lexicographically smallest sorted witness.
/// Throws TooLarge for n > 24.
IndependentSet independence_number(const Hypergraph& g);

}  // namespace cuh
