#include <catch2/catch_amalgamated.hpp>

#include "spined/families.hpp"
#include "spined/hypergraph.hpp"
#include "spined/laws.hpp"
#include "spined/populations.hpp"
#include "spined/rng.hpp"
#include "spined/triangulation.hpp"

using namespace spined;

static_assert(SpinedCategory<HypergraphCategory>);

TEST_CASE("hypergraphs canonicalize hyperedges") {
  const Hypergraph h(4, {{2, 0, 2}, {3, 1}, {1, 3}});
  REQUIRE(h.hyperedges() ==
          std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
  REQUIRE_THROWS_AS(Hypergraph(3, {{}}), PreconditionViolation);
  REQUIRE_THROWS_AS(Hypergraph(3, {{0, 3}}), RangeError);
}

TEST_CASE("the hypergraph spine is pairs plus the full set") {
  REQUIRE(hyper_spine(0) == Hypergraph(0));
  REQUIRE(hyper_spine(1) == Hypergraph(1, {{0}}));
  REQUIRE(hyper_spine(2) == Hypergraph(2, {{0, 1}}));
  REQUIRE(hyper_spine(3) ==
          Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  for (std::size_t n = 0; n <= 8; ++n)
    REQUIRE(primal_graph(hyper_spine(n)) == complete_graph(n));
}

TEST_CASE("primal graphs join co-occurring vertices") {
  REQUIRE(primal_graph(Hypergraph(3, {{0, 1, 2}})) == complete_graph(3));
  REQUIRE(primal_graph(Hypergraph(3, {{0, 1}, {1, 2}})) == path_graph(3));
  REQUIRE(primal_graph(Hypergraph(3, {{0}, {1}, {2}})) == SimpleGraph(3));
}

TEST_CASE("graph-encoded hypergraphs round-trip through the primal graph") {
  Rng rng(47);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = random_graph(rng, rng.below(8));
    REQUIRE(primal_graph(graph_as_hypergraph(g)) == g);
  }
}

TEST_CASE("hypergraph morphisms require hyperedge containment") {
  const Hypergraph triangle(3, {{0, 1, 2}});
  const Hypergraph pairs(3, {{0, 1}, {1, 2}});

  // pairs map into the triangle's full edge...
  const HypergraphMorphism into{pairs, triangle, {0, 1, 2}};
  REQUIRE(check_homomorphism(into) == HyperCheck::Ok);
  REQUIRE(is_monomorphism(into));

  // ...but the triangle edge fits in no pair
  const HypergraphMorphism back{triangle, pairs, {0, 1, 2}};
  REQUIRE(check_homomorphism(back) == HyperCheck::EdgeNotCovered);

  const HypergraphMorphism fold{pairs, triangle, {0, 0, 1}};
  REQUIRE(check_homomorphism(fold) == HyperCheck::Ok);
  REQUIRE(check_monomorphism(fold) == HyperCheck::NotInjective);

  const HypergraphMorphism bad_size{pairs, triangle, {0, 1}};
  REQUIRE(check_homomorphism(bad_size) == HyperCheck::MapSizeMismatch);
  const HypergraphMorphism bad_range{pairs, triangle, {0, 1, 5}};
  REQUIRE(check_homomorphism(bad_range) == HyperCheck::VertexOutOfRange);
}

TEST_CASE("hypergraph monomorphism enumeration matches a direct filter") {
  const Hypergraph g(2, {{0, 1}});
  const Hypergraph spine3 = hyper_spine(3);
  // all 6 injections work: every pair is a spine hyperedge
  REQUIRE(enumerate_monomorphisms(g, spine3).morphisms.size() == 6);

  const Hypergraph singleton(1, {{0}});
  const Hypergraph two_singletons(2, {{0}, {1}});
  REQUIRE(
      enumerate_monomorphisms(singleton, two_singletons).morphisms.size() ==
      2);

  // no injection: target too small
  REQUIRE(enumerate_monomorphisms(spine3, g).morphisms.empty());
}

TEST_CASE("SC1 holds exhaustively for hypergraphs on up to 3 vertices") {
  const HypergraphCategory cat;
  std::vector<Hypergraph> population;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto batch = all_hypergraphs_on(n);
    population.insert(population.end(), batch.begin(), batch.end());
  }
  REQUIRE(population.size() == 1 + 2 + 8 + 128);
  const LawReport report = check_sc1(cat, population);
  REQUIRE(report.passed());
}

TEST_CASE("gluing two triangle hyperedges along two shared vertices") {
  const Hypergraph triangle(3, {{0, 1, 2}});
  const HypergraphMorphism g{hyper_spine(2), triangle, {0, 1}};
  const HypergraphMorphism h{hyper_spine(2), triangle, {0, 1}};
  const HypergraphPushout push = hyper_clique_sum(g, h);
  REQUIRE(push.apex.vertex_count() == 4);
  REQUIRE(push.apex.hyperedge_count() == 2);
  REQUIRE(is_monomorphism(push.leg_g));
  REQUIRE(is_monomorphism(push.leg_h));
  REQUIRE(compose(push.leg_g, g) == compose(push.leg_h, h));
}

TEST_CASE("gluing along the empty spine is the disjoint union") {
  const Hypergraph a(2, {{0, 1}});
  const Hypergraph b(3, {{0, 1, 2}});
  const HypergraphMorphism g{hyper_spine(0), a, {}};
  const HypergraphMorphism h{hyper_spine(0), b, {}};
  const HypergraphPushout push = hyper_clique_sum(g, h);
  REQUIRE(push.apex.vertex_count() == 5);
  REQUIRE(push.apex.hyperedge_count() == 2);
}

TEST_CASE("identity gluing returns the object itself") {
  const Hypergraph spine3 = hyper_spine(3);
  const HypergraphMorphism id = identity_morphism(spine3);
  const HypergraphPushout push = hyper_clique_sum(id, id);
  REQUIRE(push.apex == spine3);
  REQUIRE(push.leg_g == id);
}

TEST_CASE("gluing rejects non-spine sources and non-monos") {
  const Hypergraph triangle(3, {{0, 1, 2}});
  const HypergraphMorphism from_triangle{triangle, triangle, {0, 1, 2}};
  REQUIRE_THROWS_AS(hyper_clique_sum(from_triangle, from_triangle),
                    PreconditionViolation);
  const HypergraphMorphism collapse{hyper_spine(2), triangle, {0, 0}};
  REQUIRE_THROWS_AS(hyper_clique_sum(collapse, collapse),
                    PreconditionViolation);
}

TEST_CASE("hypergraph SC2 holds on sampled diagrams") {
  const HypergraphCategory cat;
  Rng rng(2025);
  std::size_t tested = 0;
  for (int i = 0; i < 20; ++i) {
    // random span: two supergraphs of the spine on a few extra vertices
    const std::size_t n = rng.below(3);
    const Hypergraph spine = hyper_spine(n);
    const auto embed = [&](std::size_t extra) {
      const std::size_t size = n + extra;
      std::vector<std::vector<Vertex>> edges = hyper_spine(size).hyperedges();
      Hypergraph target(size, std::move(edges));
      std::vector<Vertex> map(n);
      std::iota(map.begin(), map.end(), 0);
      return HypergraphMorphism{spine, std::move(target), std::move(map)};
    };
    const auto g = embed(rng.below(3));
    const auto h = embed(rng.below(3));
    const auto gp = identity_morphism(g.target);
    const auto hp = identity_morphism(h.target);
    const LawReport report = check_sc2(cat, {g, h, gp, hp});
    for (const auto& f : report.failures)
      UNSCOPED_INFO(f.case_label << ": " << f.detail);
    REQUIRE(report.passed());
    ++tested;
  }
  REQUIRE(tested == 20);
}

TEST_CASE("hypergraph triangulation agrees with its primal graph") {
  Rng rng(4096);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = rng.below(6);
    std::vector<std::vector<Vertex>> edges;
    const std::size_t edge_count = rng.below(4);
    for (std::size_t e = 0; e < edge_count && n > 0; ++e) {
      std::vector<Vertex> edge;
      for (Vertex v = 0; v < n; ++v)
        if (rng.coin()) edge.push_back(v);
      if (!edge.empty()) edges.push_back(std::move(edge));
    }
    const Hypergraph h(n, std::move(edges));
    REQUIRE(hypergraph_delta(h).value ==
            delta_graph(primal_graph(h)).value);
  }
}
