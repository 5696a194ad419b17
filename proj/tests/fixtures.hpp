#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cuhyper/hypergraph.hpp"

namespace fixtures {

using cuh::Hypergraph;

// One 2-edge with phases 1 and i.
inline Hypergraph g1() { return Hypergraph::build(2, {{{0, 1, 0}, {1, 0, 1}}}); }

// Two 2-edges on {v0, v1} with phases (1, 1) and (1, -1).
inline Hypergraph g2() { return Hypergraph::build(2, {{{0, 1, 0}, {1, 1, 0}}, {{0, 1, 0}, {1, -1, 0}}}); }

// One all-ones 3-edge.
inline Hypergraph g3() { return Hypergraph::build(3, {{{0, 1, 0}, {1, 1, 0}, {2, 1, 0}}}); }

struct CorpusEntry {
  cuh::RandomOptions options;
  Hypergraph graph;
};

// Seeded random instances with 1 <= n, m <= 10, p in [0.3, 0.9] and phase
// modes cycling through continuous and the 2nd, 3rd and 4th roots of unity.
inline std::vector<CorpusEntry> corpus(std::size_t count = 500, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    cuh::RandomOptions o;
    o.n = size(rng);
    o.m = size(rng);
    o.p = density(rng);
    o.mode = i % 4 == 0 ? cuh::PhaseMode::Continuous : cuh::PhaseMode::RootsOfUnity;
    o.k = i % 4 + 1;
    o.seed = rng();
    out.push_back({o, cuh::gen_random(o).graph});
  }
  return out;
}

}  // namespace fixtures
