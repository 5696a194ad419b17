#include "cuhyper/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "cuhyper/error.hpp"

namespace cuh {

namespace {

// Values this close to unit modulus are stored as-is so that construction is
// idempotent; anything further out is pulled back onto the circle.
constexpr double kRenormalizeThreshold = 0x1p-50;

double canonical_zero(double x) { return x == 0.0 ? 0.0 : x; }

std::string incidence_location(std::size_t e, std::size_t j) {
  return "edges[" + std::to_string(e) + "][" + std::to_string(j) + "]";
}

}  // namespace

Phase::Phase(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw Error(ErrorCode::NonUnitPhase, "phase is not finite");
  }
  const double modulus = std::hypot(re, im);
  if (std::abs(modulus - 1.0) > kUnitModulusTolerance) {
    throw Error(ErrorCode::NonUnitPhase,
                "phase modulus " + std::to_string(modulus) + " is not 1");
  }
  if (std::abs(modulus - 1.0) > kRenormalizeThreshold) {
    re /= modulus;
    im /= modulus;
  }
  re_ = canonical_zero(re);
  im_ = canonical_zero(im);
}

Phase::Phase(Unchecked, double re, double im) noexcept
    : re_(canonical_zero(re)), im_(canonical_zero(im)) {}

Phase Phase::from_angle(double theta) { return Phase(std::cos(theta), std::sin(theta)); }

Phase Phase::inverse() const noexcept { return Phase(Unchecked{}, re_, -im_); }

Phase Phase::operator*(const Phase& other) const noexcept {
  const Complex z = value() * other.value();
  // A product of units drifts by a few ulps at most; keep it on the circle.
  const double modulus = std::hypot(z.real(), z.imag());
  if (std::abs(modulus - 1.0) > kRenormalizeThreshold) {
    return Phase(Unchecked{}, z.real() / modulus, z.imag() / modulus);
  }
  return Phase(Unchecked{}, z.real(), z.imag());
}

// ---------------------------------------------------------------------------

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edges_[e].empty() && edges_[e].rbegin()->first >= n_) {
      throw Error(ErrorCode::BadVertexIndex,
                  "vertex " + std::to_string(edges_[e].rbegin()->first) +
                      " out of range for n=" + std::to_string(n_),
                  "edges[" + std::to_string(e) + "]");
    }
  }
}

Hypergraph Hypergraph::build(std::size_t n,
                             const std::vector<std::vector<RawIncidence>>& raw_edges) {
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    Edge edge;
    for (std::size_t j = 0; j < raw_edges[e].size(); ++j) {
      const RawIncidence& raw = raw_edges[e][j];
      const std::string where = incidence_location(e, j);
      if (raw.vertex >= n) {
        throw Error(ErrorCode::BadVertexIndex,
                    "vertex " + std::to_string(raw.vertex) + " out of range for n=" +
                        std::to_string(n),
                    where + ".v");
      }
      Phase phase;
      try {
        phase = Phase(raw.re, raw.im);
      } catch (const Error& err) {
        throw Error(err.code(), "phase (" + std::to_string(raw.re) + ", " +
                                    std::to_string(raw.im) + ") is not a complex unit",
                    where + ".omega");
      }
      if (!edge.emplace(raw.vertex, phase).second) {
        throw Error(ErrorCode::DuplicateIncidence,
                    "vertex " + std::to_string(raw.vertex) + " appears twice in edge " +
                        std::to_string(e),
                    where);
      }
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, std::move(edges));
}

std::size_t Hypergraph::num_incidences() const noexcept {
  std::size_t total = 0;
  for (const Edge& edge : edges_) total += edge.size();
  return total;
}

const Edge& Hypergraph::edge(std::size_t e) const {
  if (e >= edges_.size()) {
    throw Error(ErrorCode::BadEdgeIndex, "edge " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

std::optional<Phase> Hypergraph::phase(std::size_t v, std::size_t e) const {
  const Edge& ed = edge(e);
  if (auto it = ed.find(v); it != ed.end()) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

DegreeProfile degree_profile(const Hypergraph& g) {
  DegreeProfile profile;
  profile.degrees.assign(g.num_vertices(), 0);
  profile.sizes.reserve(g.num_edges());
  for (const Edge& edge : g.edges()) {
    profile.sizes.push_back(edge.size());
    for (const auto& [v, phase] : edge) ++profile.degrees[v];
  }
  if (!profile.degrees.empty()) {
    profile.max_degree = *std::max_element(profile.degrees.begin(), profile.degrees.end());
  }
  if (!profile.sizes.empty()) {
    profile.max_size = *std::max_element(profile.sizes.begin(), profile.sizes.end());
  }
  const auto all_equal = [](const std::vector<std::size_t>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
  };
  profile.is_regular = all_equal(profile.degrees);
  profile.is_uniform = all_equal(profile.sizes);
  return profile;
}

Phase adjacency_gain(const Hypergraph& g, std::size_t e, std::size_t i, std::size_t j) {
  const Edge& edge = g.edge(e);
  const auto wi = edge.find(i);
  const auto wj = edge.find(j);
  if (i == j || wi == edge.end() || wj == edge.end()) {
    throw Error(ErrorCode::NotAdjacentInEdge,
                "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                    " are not adjacent in edge " + std::to_string(e));
  }
  return Phase(-1.0, 0.0) * wi->second * wj->second.inverse();
}

std::vector<std::size_t> vertex_components(const Hypergraph& g) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& edge : g.edges()) {
    if (edge.empty()) continue;
    const std::size_t root = find(edge.begin()->first);
    for (const auto& [v, phase] : edge) {
      const std::size_t r = find(v);
      if (r != root) parent[std::max(r, root)] = std::min(r, root);
    }
  }
  std::vector<std::size_t> label(g.num_vertices());
  std::vector<std::size_t> id_of_root(g.num_vertices(), g.num_vertices());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::size_t r = find(v);
    if (id_of_root[r] == g.num_vertices()) id_of_root[r] = next++;
    label[v] = id_of_root[r];
  }
  return label;
}

// ---------------------------------------------------------------------------

Hypergraph dual(const Hypergraph& g) {
  std::vector<Edge> edges(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    for (const auto& [v, phase] : g.edge(e)) edges[v].emplace(e, phase.inverse());
  }
  return Hypergraph(g.num_edges(), std::move(edges));
}

Hypergraph underlying(const Hypergraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& edge : g.edges()) {
    Edge ones;
    for (const auto& [v, phase] : edge) ones.emplace_hint(ones.end(), v, Phase());
    edges.push_back(std::move(ones));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

VertexDeletion weak_delete_vertices(const Hypergraph& g, const std::set<std::size_t>& removed) {
  if (!removed.empty() && *removed.rbegin() >= g.num_vertices()) {
    throw Error(ErrorCode::BadVertexIndex,
                "cannot delete vertex " + std::to_string(*removed.rbegin()) +
                    " of a hypergraph with " + std::to_string(g.num_vertices()) + " vertices");
  }
  VertexDeletion result;
  result.index_map.resize(g.num_vertices());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!removed.contains(v)) result.index_map[v] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& edge : g.edges()) {
    Edge kept;
    for (const auto& [v, phase] : edge) {
      if (const auto mapped = result.index_map[v]) kept.emplace_hint(kept.end(), *mapped, phase);
    }
    edges.push_back(std::move(kept));
  }
  result.graph = Hypergraph(next, std::move(edges));
  return result;
}

Hypergraph weak_delete_edges(const Hypergraph& g, const std::set<std::size_t>& removed) {
  if (!removed.empty() && *removed.rbegin() >= g.num_edges()) {
    throw Error(ErrorCode::BadEdgeIndex,
                "cannot delete edge " + std::to_string(*removed.rbegin()) +
                    " of a hypergraph with " + std::to_string(g.num_edges()) + " edges");
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!removed.contains(e)) edges.push_back(g.edge(e));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

SwitchingFunction SwitchingFunction::inverse() const {
  SwitchingFunction inv{kind, {}};
  inv.values.reserve(values.size());
  for (const Phase& z : values) inv.values.push_back(z.inverse());
  return inv;
}

Hypergraph apply_switching(const Hypergraph& g, const SwitchingFunction& f) {
  const bool by_vertex = f.kind == SwitchingFunction::Kind::Vertex;
  const std::size_t expected = by_vertex ? g.num_vertices() : g.num_edges();
  if (f.values.size() != expected) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(by_vertex ? "vertex" : "edge") + " switching function has " +
                    std::to_string(f.values.size()) + " values, expected " +
                    std::to_string(expected));
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Edge switched;
    for (const auto& [v, phase] : g.edge(e)) {
      const Phase& z = by_vertex ? f.values[v] : f.values[e];
      switched.emplace_hint(switched.end(), v, z.inverse() * phase);
    }
    edges.push_back(std::move(switched));
  }
  return Hypergraph(g.num_vertices(), std::move(edges));
}

// ---------------------------------------------------------------------------

GeneratedHypergraph gen_random(const RandomOptions& options) {
  if (!(options.p > 0.0 && options.p <= 1.0)) {
    throw Error(ErrorCode::BadParameter, "inclusion probability must lie in (0, 1]");
  }
  if (options.n == 0) throw Error(ErrorCode::BadParameter, "n must be at least 1");
  if (options.mode == PhaseMode::RootsOfUnity && options.k == 0) {
    throw Error(ErrorCode::BadParameter, "k must be at least 1");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto draw_phase = [&]() {
    if (options.mode == PhaseMode::Continuous) {
      return Phase::from_angle(2.0 * std::numbers::pi * unit(rng));
    }
    std::uniform_int_distribution<std::size_t> root(0, options.k - 1);
    const std::size_t j = root(rng);
    if (j == 0) return Phase();
    // Exact values for the roots the fuzz corpus uses most.
    if (2 * j == options.k) return Phase(-1.0, 0.0);
    if (options.k == 4) return j == 1 ? Phase(0.0, 1.0) : Phase(0.0, -1.0);
    return Phase::from_angle(2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(options.k));
  };

  GeneratedHypergraph out;
  std::vector<Edge> edges;
  edges.reserve(options.m);
  for (std::size_t e = 0; e < options.m; ++e) {
    Edge edge;
    for (int attempt = 0; attempt <= kEmptyEdgeResamples && edge.empty(); ++attempt) {
      for (std::size_t v = 0; v < options.n; ++v) {
        if (unit(rng) < options.p) edge.emplace_hint(edge.end(), v, draw_phase());
      }
    }
    if (edge.empty()) out.empty_edge_warning = true;
    edges.push_back(std::move(edge));
  }
  out.graph = Hypergraph(options.n, std::move(edges));
  return out;
}

Hypergraph gen_single_edge_all_ones(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "n must be at least 1");
  Edge edge;
  for (std::size_t v = 0; v < n; ++v) edge.emplace_hint(edge.end(), v, Phase());
  return Hypergraph(n, {std::move(edge)});
}

// ---------------------------------------------------------------------------

IndependentSet independence_number(const Hypergraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kIndependenceMaxVertices) {
    throw Error(ErrorCode::TooLarge, "independence_number is brute force; n=" +
                                         std::to_string(n) + " exceeds " +
                                         std::to_string(kIndependenceMaxVertices));
  }
  std::vector<std::uint32_t> edge_masks;
  for (const Edge& edge : g.edges()) {
    std::uint32_t mask = 0;
    for (const auto& [v, phase] : edge) mask |= std::uint32_t{1} << v;
    if (std::popcount(mask) > 1) edge_masks.push_back(mask);
  }

  // Reversing bit order turns "smallest sorted vertex list" into "largest
  // mask" for sets of equal cardinality: compare on the lowest differing bit.
  const auto lex_smaller = [](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  };

  std::uint32_t best = 0;
  int best_size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const int size = std::popcount(subset);
    if (size < best_size) continue;
    if (size == best_size && !lex_smaller(subset, best)) continue;
    const bool independent =
        std::all_of(edge_masks.begin(), edge_masks.end(),
                    [subset](std::uint32_t mask) { return std::popcount(subset & mask) <= 1; });
    if (independent) {
      best = subset;
      best_size = size;
    }
  }

  IndependentSet result;
  result.alpha = static_cast<std::size_t>(best_size);
  for (std::size_t v = 0; v < n; ++v) {
    if (best & (std::uint32_t{1} << v)) result.witness.push_back(v);
  }
  return result;
}

}  // namespace cuh
