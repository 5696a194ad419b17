#include <doctest.h>

#include <cmath>
#include <limits>

#include "cuhyper/error.hpp"
#include "cuhyper/hypergraph.hpp"
#include "fixtures.hpp"

using namespace cuh;
using fixtures::g1;
using fixtures::g2;
using fixtures::g3;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no cuh::Error thrown");
  return ErrorCode::IoError;
}

std::string location_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.location();
  }
  return "<none>";
}

double max_phase_gap(const Hypergraph& a, const Hypergraph& b) {
  REQUIRE(a.num_vertices() == b.num_vertices());
  REQUIRE(a.num_edges() == b.num_edges());
  double worst = 0.0;
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    REQUIRE(a.edge(e).size() == b.edge(e).size());
    for (const auto& [v, w] : a.edge(e)) {
      const auto other = b.phase(v, e);
      REQUIRE(other.has_value());
      worst = std::max(worst, std::abs(w.value() - other->value()));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("phase construction") {
  CHECK(Phase().value() == Complex(1, 0));
  CHECK(code_of([] { Phase(0.5, 0.5); }) == ErrorCode::NonUnitPhase);
  CHECK(code_of([] { Phase(std::numeric_limits<double>::quiet_NaN(), 0); }) == ErrorCode::NonUnitPhase);
  CHECK(code_of([] { Phase(std::numeric_limits<double>::infinity(), 0); }) == ErrorCode::NonUnitPhase);

  const Phase nearly(1.0 + 5e-10, 0.0);
  CHECK(nearly.re() == 1.0);
  CHECK(nearly.im() == 0.0);

  const Phase negative_zero(-0.0, 1.0);
  CHECK_FALSE(std::signbit(negative_zero.re()));

  const Phase i(0, 1);
  CHECK(i.inverse() == Phase(0, -1));
  CHECK(std::abs((i * i).value() - Complex(-1, 0)) == 0.0);

  const Phase w = Phase::from_angle(0.7);
  CHECK(std::abs(std::abs(w.value()) - 1.0) < 1e-15);
  CHECK(std::abs((w * w.inverse()).value() - Complex(1, 0)) < 1e-15);
}

TEST_CASE("build stores the given incidences") {
  const Hypergraph a = g1();
  CHECK(a.num_vertices() == 2);
  CHECK(a.num_edges() == 1);
  CHECK(a.num_incidences() == 2);
  CHECK(a.phase(0, 0) == Phase(1, 0));
  CHECK(a.phase(1, 0) == Phase(0, 1));

  const Hypergraph b = g3();
  for (std::size_t v = 0; v < 3; ++v) CHECK(b.phase(v, 0) == Phase());
  CHECK(b == gen_single_edge_all_ones(3));
}

TEST_CASE("build rejects malformed incidences") {
  CHECK(code_of([] { Hypergraph::build(2, {{{0, 0.5, 0.5}}}); }) == ErrorCode::NonUnitPhase);
  CHECK(location_of([] { Hypergraph::build(2, {{{0, 1, 0}, {1, 0.5, 0.5}}}); }) == "edges[0][1].omega");
  CHECK(code_of([] { Hypergraph::build(2, {{{0, 1, 0}, {0, 0, 1}}}); }) == ErrorCode::DuplicateIncidence);
  CHECK(location_of([] { Hypergraph::build(2, {{}, {{1, 1, 0}, {1, 1, 0}}}); }) == "edges[1][1]");
  CHECK(code_of([] { Hypergraph::build(2, {{{2, 1, 0}}}); }) == ErrorCode::BadVertexIndex);
  CHECK(location_of([] { Hypergraph::build(2, {{{2, 1, 0}}}); }) == "edges[0][0].v");
  CHECK(code_of([] { Hypergraph(1, {Edge{{3, Phase()}}}); }) == ErrorCode::BadVertexIndex);
  CHECK(code_of([] { g1().edge(1); }) == ErrorCode::BadEdgeIndex);
}

TEST_CASE("degree profile") {
  const DegreeProfile p3 = degree_profile(g3());
  CHECK(p3.degrees == std::vector<std::size_t>{1, 1, 1});
  CHECK(p3.sizes == std::vector<std::size_t>{3});
  CHECK(p3.max_degree == 1);
  CHECK(p3.max_size == 3);
  CHECK(p3.is_regular);
  CHECK(p3.is_uniform);

  const DegreeProfile p1 = degree_profile(g1());
  CHECK(p1.degrees == std::vector<std::size_t>{1, 1});
  CHECK(p1.sizes == std::vector<std::size_t>{2});
  CHECK(p1.max_degree == 1);
  CHECK(p1.max_size == 2);

  const DegreeProfile p2 = degree_profile(g2());
  CHECK(p2.degrees == std::vector<std::size_t>{2, 2});
  CHECK(p2.sizes == std::vector<std::size_t>{2, 2});
  CHECK(p2.is_regular);
  CHECK(p2.is_uniform);

  const DegreeProfile empty = degree_profile(Hypergraph());
  CHECK(empty.is_regular);
  CHECK(empty.is_uniform);
  CHECK(empty.max_degree == 0);

  const DegreeProfile ragged = degree_profile(Hypergraph::build(3, {{{0, 1, 0}, {1, 1, 0}}}));
  CHECK_FALSE(ragged.is_regular);
  CHECK(ragged.is_uniform);
}

TEST_CASE("adjacency gain") {
  CHECK(adjacency_gain(g1(), 0, 0, 1) == Phase(0, 1));
  CHECK(adjacency_gain(g1(), 0, 1, 0) == Phase(0, -1));
  CHECK(adjacency_gain(g3(), 0, 0, 1) == Phase(-1, 0));
  const Hypergraph same = Hypergraph::build(2, {{{0, 0, 1}, {1, 0, 1}}});
  CHECK(adjacency_gain(same, 0, 0, 1) == Phase(-1, 0));
  CHECK(code_of([] { adjacency_gain(g3(), 0, 1, 1); }) == ErrorCode::NotAdjacentInEdge);
  CHECK(code_of([] { adjacency_gain(Hypergraph::build(3, {{{0, 1, 0}, {1, 1, 0}}}), 0, 0, 2); }) ==
        ErrorCode::NotAdjacentInEdge);
  CHECK(code_of([] { adjacency_gain(g3(), 1, 0, 1); }) == ErrorCode::BadEdgeIndex);
}

TEST_CASE("dual") {
  const Hypergraph d = dual(g1());
  CHECK(d.num_vertices() == 1);
  CHECK(d.num_edges() == 2);
  CHECK(d.phase(0, 0) == Phase(1, 0));
  CHECK(d.phase(0, 1) == Phase(0, -1));
  CHECK(dual(dual(g3())) == g3());
  CHECK(dual(Hypergraph()) == Hypergraph());
}

TEST_CASE("underlying") {
  const Hypergraph u1 = underlying(g1());
  CHECK(u1.phase(0, 0) == Phase());
  CHECK(u1.phase(1, 0) == Phase());
  CHECK(underlying(g3()) == g3());
  const Hypergraph u2 = underlying(g2());
  CHECK(u2.num_edges() == 2);
  CHECK(u2.edge(0) == u2.edge(1));
  CHECK(u2.edge(0).at(1) == Phase());
}

TEST_CASE("weak vertex deletion") {
  const VertexDeletion a = weak_delete_vertices(g3(), {2});
  CHECK(a.graph == Hypergraph::build(2, {{{0, 1, 0}, {1, 1, 0}}}));
  CHECK(a.index_map == std::vector<std::optional<std::size_t>>{0, 1, std::nullopt});

  const VertexDeletion b = weak_delete_vertices(g1(), {0, 1});
  CHECK(b.graph.num_vertices() == 0);
  CHECK(b.graph.num_edges() == 1);
  CHECK(b.graph.edge(0).empty());

  CHECK(weak_delete_vertices(g2(), {}).graph == g2());

  const VertexDeletion c = weak_delete_vertices(Hypergraph::build(3, {{{0, 1, 0}, {2, 0, 1}}}), {1});
  CHECK(c.graph.phase(1, 0) == Phase(0, 1));
  CHECK(c.index_map[2] == 1);
  CHECK(code_of([] { weak_delete_vertices(g1(), {2}); }) == ErrorCode::BadVertexIndex);
}

TEST_CASE("weak edge deletion") {
  const Hypergraph a = weak_delete_edges(g2(), {1});
  CHECK(a == Hypergraph::build(2, {{{0, 1, 0}, {1, 1, 0}}}));
  const Hypergraph b = weak_delete_edges(g1(), {0});
  CHECK(b.num_vertices() == 2);
  CHECK(b.num_edges() == 0);
  CHECK(degree_profile(b).degrees == std::vector<std::size_t>{0, 0});
  CHECK(weak_delete_edges(g2(), {}) == g2());
  CHECK(code_of([] { weak_delete_edges(g1(), {1}); }) == ErrorCode::BadEdgeIndex);
}

TEST_CASE("switching") {
  const SwitchingFunction zeta{SwitchingFunction::Kind::Vertex, {Phase(1, 0), Phase(0, 1)}};
  CHECK(apply_switching(g1(), zeta) == underlying(g1()));

  const SwitchingFunction xi{SwitchingFunction::Kind::Edge, {Phase(-1, 0)}};
  const Hypergraph s = apply_switching(g3(), xi);
  for (std::size_t v = 0; v < 3; ++v) CHECK(s.phase(v, 0) == Phase(-1, 0));

  const SwitchingFunction ones{SwitchingFunction::Kind::Vertex, {Phase(), Phase(), Phase()}};
  CHECK(apply_switching(g3(), ones) == g3());

  CHECK(code_of([&] { apply_switching(g3(), zeta); }) == ErrorCode::LengthMismatch);
  const SwitchingFunction long_xi{SwitchingFunction::Kind::Edge, {Phase(), Phase()}};
  CHECK(code_of([&] { apply_switching(g3(), long_xi); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("random generator") {
  RandomOptions full;
  full.n = 5;
  full.m = 3;
  full.p = 1.0;
  full.mode = PhaseMode::RootsOfUnity;
  full.k = 1;
  full.seed = 99;
  const Hypergraph all = gen_random(full).graph;
  CHECK(all.num_edges() == 3);
  for (const Edge& e : all.edges()) {
    CHECK(e.size() == 5);
    for (const auto& [v, w] : e) CHECK(w == Phase());
  }

  RandomOptions one;
  one.n = 3;
  one.m = 1;
  one.p = 1.0;
  one.seed = 7;
  const Hypergraph x = gen_random(one).graph;
  CHECK(x.edge(0).size() == 3);
  CHECK(gen_random(one).graph == x);
  one.seed = 8;
  CHECK_FALSE(gen_random(one).graph == x);

  RandomOptions signs;
  signs.n = 4;
  signs.m = 2;
  signs.p = 0.5;
  signs.mode = PhaseMode::RootsOfUnity;
  signs.k = 2;
  signs.seed = 1;
  const Hypergraph signed_graph = gen_random(signs).graph;
  for (const Edge& e : signed_graph.edges())
    for (const auto& [v, w] : e) CHECK((w == Phase(1, 0) || w == Phase(-1, 0)));

  RandomOptions bad;
  bad.p = 0.0;
  CHECK(code_of([&] { gen_random(bad); }) == ErrorCode::BadParameter);
  bad.p = 1.5;
  CHECK(code_of([&] { gen_random(bad); }) == ErrorCode::BadParameter);
  bad.p = 0.5;
  bad.n = 0;
  CHECK(code_of([&] { gen_random(bad); }) == ErrorCode::BadParameter);
  bad.n = 2;
  bad.mode = PhaseMode::RootsOfUnity;
  bad.k = 0;
  CHECK(code_of([&] { gen_random(bad); }) == ErrorCode::BadParameter);
}

TEST_CASE("empty edge fallback sets the warning flag") {
  RandomOptions sparse;
  sparse.n = 1;
  sparse.m = 50;
  sparse.p = 1e-6;
  sparse.seed = 3;
  const GeneratedHypergraph out = gen_random(sparse);
  CHECK(out.empty_edge_warning);
  CHECK(out.graph.num_edges() == 50);

  RandomOptions dense = sparse;
  dense.p = 0.9;
  CHECK_FALSE(gen_random(dense).empty_edge_warning);
}

TEST_CASE("single all-ones edge") {
  CHECK(gen_single_edge_all_ones(3) == g3());
  const Hypergraph one = gen_single_edge_all_ones(1);
  CHECK(one.num_vertices() == 1);
  CHECK(one.edge(0).size() == 1);
  const DegreeProfile p5 = degree_profile(gen_single_edge_all_ones(5));
  CHECK(p5.max_degree == 1);
  CHECK(p5.max_size == 5);
  CHECK(p5.is_regular);
  CHECK(p5.is_uniform);
  CHECK(code_of([] { gen_single_edge_all_ones(0); }) == ErrorCode::BadParameter);
}

TEST_CASE("independence number") {
  const IndependentSet a = independence_number(g3());
  CHECK(a.alpha == 1);
  CHECK(a.witness == std::vector<std::size_t>{0});
  CHECK(independence_number(Hypergraph(4, {})).alpha == 4);
  CHECK(independence_number(g2()).alpha == 1);
  CHECK(independence_number(Hypergraph()).alpha == 0);

  // Path v0-v1-v2-v3 as 2-edges: {v0, v2} is the smallest maximum witness.
  const Hypergraph path = Hypergraph::build(4, {{{0, 1, 0}, {1, 1, 0}}, {{1, 1, 0}, {2, 1, 0}}, {{2, 1, 0}, {3, 1, 0}}});
  const IndependentSet p = independence_number(path);
  CHECK(p.alpha == 2);
  CHECK(p.witness == std::vector<std::size_t>{0, 2});
  CHECK(code_of([] { independence_number(Hypergraph(25, {})); }) == ErrorCode::TooLarge);
}

TEST_CASE("vertex components") {
  const Hypergraph g = Hypergraph::build(5, {{{3, 1, 0}, {4, 1, 0}}, {{1, 1, 0}}, {{0, 1, 0}, {1, 1, 0}}});
  CHECK(vertex_components(g) == std::vector<std::size_t>{0, 0, 1, 2, 2});
  CHECK(vertex_components(Hypergraph()).empty());
}

// ---------------------------------------------------------------------------
// Properties over the random corpus

TEST_CASE("gain reciprocity") {
  for (const auto& entry : fixtures::corpus(100)) {
    const Hypergraph& g = entry.graph;
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      for (const auto& [i, wi] : g.edge(e))
        for (const auto& [j, wj] : g.edge(e)) {
          if (i == j) continue;
          const Complex product = adjacency_gain(g, e, i, j).value() * adjacency_gain(g, e, j, i).value();
          CHECK(std::abs(product - Complex(1, 0)) <= 1e-12);
        }
  }
}

TEST_CASE("dual is an involution and swaps degrees with sizes") {
  for (const auto& entry : fixtures::corpus(100)) {
    const Hypergraph& g = entry.graph;
    const Hypergraph d = dual(g);
    CHECK(max_phase_gap(dual(d), g) <= 1e-15);
    CHECK(degree_profile(d).degrees == degree_profile(g).sizes);
    CHECK(degree_profile(d).sizes == degree_profile(g).degrees);
  }
}

TEST_CASE("switching by the inverse restores the phases") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (const auto& entry : fixtures::corpus(100)) {
    const Hypergraph& g = entry.graph;
    SwitchingFunction zeta{SwitchingFunction::Kind::Vertex, {}};
    SwitchingFunction xi{SwitchingFunction::Kind::Edge, {}};
    for (std::size_t v = 0; v < g.num_vertices(); ++v) zeta.values.push_back(Phase::from_angle(angle(rng)));
    for (std::size_t e = 0; e < g.num_edges(); ++e) xi.values.push_back(Phase::from_angle(angle(rng)));
    CHECK(max_phase_gap(apply_switching(apply_switching(g, zeta), zeta.inverse()), g) <= 1e-15);
    CHECK(max_phase_gap(apply_switching(apply_switching(g, xi), xi.inverse()), g) <= 1e-15);
  }
}

TEST_CASE("disjoint vertex deletions commute") {
  std::mt19937_64 rng(11);
  for (const auto& entry : fixtures::corpus(100)) {
    const Hypergraph& g = entry.graph;
    const std::size_t n = g.num_vertices();
    std::set<std::size_t> first, second;
    for (std::size_t v = 0; v < n; ++v) {
      const auto pick = rng() % 3;
      if (pick == 0) first.insert(v);
      if (pick == 1) second.insert(v);
    }
    const auto compose = [&](const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
      const VertexDeletion step = weak_delete_vertices(g, a);
      std::set<std::size_t> mapped;
      for (std::size_t v : b) mapped.insert(*step.index_map[v]);
      return weak_delete_vertices(step.graph, mapped).graph;
    };
    std::set<std::size_t> both = first;
    both.insert(second.begin(), second.end());
    const Hypergraph ab = compose(first, second);
    CHECK(ab == compose(second, first));
    CHECK(ab == weak_delete_vertices(g, both).graph);
  }
}

TEST_CASE("roots-of-unity phases have unit k-th power") {
  for (std::size_t k = 1; k <= 8; ++k) {
    RandomOptions o;
    o.n = 8;
    o.m = 8;
    o.p = 0.7;
    o.mode = PhaseMode::RootsOfUnity;
    o.k = k;
    o.seed = 1000 + k;
    const Hypergraph g = gen_random(o).graph;
    for (const Edge& e : g.edges())
      for (const auto& [v, w] : e) CHECK(std::abs(std::pow(w.value(), static_cast<int>(k)) - Complex(1, 0)) <= 1e-12);
  }
}

TEST_CASE("phases stay unit modulus in the corpus") {
  for (const auto& entry : fixtures::corpus(500))
    for (const Edge& e : entry.graph.edges()) {
      CHECK_FALSE(e.empty());
      for (const auto& [v, w] : e) CHECK(std::abs(std::abs(w.value()) - 1.0) <= 1e-15);
    }
}
