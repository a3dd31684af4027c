#include <catch2/catch_amalgamated.hpp>

#include "spined/families.hpp"
#include "spined/graph.hpp"
#include "spined/populations.hpp"
#include "spined/rng.hpp"

using namespace spined;

TEST_CASE("simple graphs canonicalize their edge set") {
  const SimpleGraph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
  REQUIRE(g.vertex_count() == 4);
  REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  REQUIRE(g.has_edge(1, 0));
  REQUIRE(g.has_edge(2, 1));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE(g.degree(0) == 2);
  REQUIRE(g.degree(2) == 1);
  REQUIRE(g.neighbors(1) == std::vector<Vertex>{0, 2});
}

TEST_CASE("simple graphs reject loops and out-of-range endpoints") {
  REQUIRE_THROWS_AS(SimpleGraph(3, {{1, 1}}), PreconditionViolation);
  REQUIRE_THROWS_AS(SimpleGraph(3, {{0, 3}}), RangeError);
  REQUIRE_THROWS_AS(SimpleGraph(0, {{0, 0}}), Error);
}

TEST_CASE("complete graphs have all pairs") {
  REQUIRE(complete_graph(0).vertex_count() == 0);
  REQUIRE(complete_graph(0).edge_count() == 0);
  REQUIRE(complete_graph(1).edge_count() == 0);
  REQUIRE(complete_graph(5).edge_count() == 10);
  REQUIRE(is_complete_graph(complete_graph(6)));
  REQUIRE_FALSE(is_complete_graph(path_graph(3)));
}

TEST_CASE("named families have the expected shape") {
  REQUIRE(path_graph(1).edge_count() == 0);
  REQUIRE(path_graph(5).edge_count() == 4);
  REQUIRE(cycle_graph(3) == complete_graph(3));
  REQUIRE(cycle_graph(6).edge_count() == 6);
  REQUIRE_THROWS_AS(cycle_graph(2), PreconditionViolation);
  const SimpleGraph grid = grid_graph(3, 3);
  REQUIRE(grid.vertex_count() == 9);
  REQUIRE(grid.edge_count() == 12);
  const SimpleGraph petersen = petersen_graph();
  REQUIRE(petersen.vertex_count() == 10);
  REQUIRE(petersen.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) REQUIRE(petersen.degree(v) == 3);
}

TEST_CASE("adjacency bitsets are bounded at 64 vertices") {
  REQUIRE(adjacency_bits(path_graph(3))[1] == 0b101);
  REQUIRE_THROWS_AS(adjacency_bits(SimpleGraph(65)), BoundExceeded);
}

TEST_CASE("spine index is the vertex count") {
  REQUIRE(spine_index(SimpleGraph(0)) == 0);
  REQUIRE(spine_index(complete_graph(1)) == 1);
  REQUIRE(spine_index(cycle_graph(5)) == 5);
}

TEST_CASE("clique-sum of two triangles along a shared edge") {
  const GraphMorphism g{complete_graph(2), complete_graph(3), {0, 1}};
  const GraphMorphism h{complete_graph(2), complete_graph(3), {0, 1}};
  const GraphPushout push = clique_sum_pushout(g, h);

  // K_4 minus one edge: 4 vertices, 5 edges
  REQUIRE(push.apex.vertex_count() == 4);
  REQUIRE(push.apex.edge_count() == 5);
  REQUIRE(is_monomorphism(push.leg_g));
  REQUIRE(is_monomorphism(push.leg_h));
  REQUIRE(compose(push.leg_g, g) == compose(push.leg_h, h));
}

TEST_CASE("clique-sum along the empty spine is the disjoint union") {
  const SimpleGraph k0 = complete_graph(0);
  const GraphMorphism g{k0, cycle_graph(3), {}};
  const GraphMorphism h{k0, path_graph(2), {}};
  const GraphPushout push = clique_sum_pushout(g, h);
  REQUIRE(push.apex.vertex_count() == 5);
  REQUIRE(push.apex.edge_count() == 4);
  REQUIRE(compose(push.leg_g, g) == compose(push.leg_h, h));
}

TEST_CASE("clique-sum along identity embeddings returns the object") {
  const SimpleGraph k3 = complete_graph(3);
  const GraphMorphism id = identity_morphism(k3);
  const GraphPushout push = clique_sum_pushout(id, id);
  REQUIRE(push.apex == k3);
  REQUIRE(push.leg_g == identity_morphism(k3));
  REQUIRE(push.leg_h == identity_morphism(k3));
}

TEST_CASE("clique-sum rejects non-monos and non-spine sources") {
  const GraphMorphism collapse{complete_graph(2), complete_graph(3), {0, 0}};
  REQUIRE_THROWS_AS(clique_sum_pushout(collapse, collapse),
                    PreconditionViolation);
  const GraphMorphism from_path{path_graph(3), complete_graph(3), {0, 1, 2}};
  REQUIRE_THROWS_AS(clique_sum_pushout(from_path, from_path),
                    PreconditionViolation);
}

TEST_CASE("clique-sum counts match the gluing formula on random spans") {
  Rng rng(311);
  for (int i = 0; i < 50; ++i) {
    const auto [g, h] = random_clique_sum_span(rng, 6);
    const std::size_t n = g.source.vertex_count();
    const GraphPushout push = clique_sum_pushout(g, h);
    REQUIRE(push.apex.vertex_count() ==
            g.target.vertex_count() + h.target.vertex_count() - n);
    REQUIRE(push.apex.edge_count() == g.target.edge_count() +
                                          h.target.edge_count() -
                                          n * (n > 0 ? n - 1 : 0) / 2);
    REQUIRE(is_monomorphism(push.leg_g));
    REQUIRE(is_monomorphism(push.leg_h));
    REQUIRE(compose(push.leg_g, g) == compose(push.leg_h, h));
  }
}

TEST_CASE("mediating morphism of identity extensions is the identity") {
  const GraphMorphism g{complete_graph(2), complete_graph(3), {0, 1}};
  const GraphMorphism h{complete_graph(2), complete_graph(3), {1, 2}};
  const GraphPushout push = clique_sum_pushout(g, h);
  const GraphMorphism m = mediating_morphism(
      g, h, identity_morphism(g.target), identity_morphism(h.target));
  REQUIRE(m == identity_morphism(push.apex));
}

TEST_CASE("mediating morphism for disjoint unions is the coproduct map") {
  const SimpleGraph k0 = complete_graph(0);
  const GraphMorphism g{k0, path_graph(2), {}};
  const GraphMorphism h{k0, path_graph(3), {}};
  Rng rng(7);
  const GraphMorphism gp = random_supergraph(rng, g.target, 1);
  const GraphMorphism hp = random_supergraph(rng, h.target, 2);
  const GraphMorphism m = mediating_morphism(g, h, gp, hp);
  REQUIRE(is_monomorphism(m));
  const GraphPushout p = clique_sum_pushout(g, h);
  const GraphPushout pp = clique_sum_pushout(compose(gp, g), compose(hp, h));
  REQUIRE(compose(m, p.leg_g) == compose(pp.leg_g, gp));
  REQUIRE(compose(m, p.leg_h) == compose(pp.leg_h, hp));
}

TEST_CASE("mediating morphism commutes and is monic on random diagrams") {
  Rng rng(1553);
  for (int i = 0; i < 40; ++i) {
    const auto d = random_sc2_diagram(rng, 5);
    const GraphMorphism m = mediating_morphism(d.g, d.h, d.gp, d.hp);
    REQUIRE(is_monomorphism(m));
    const GraphPushout p = clique_sum_pushout(d.g, d.h);
    const GraphPushout pp =
        clique_sum_pushout(compose(d.gp, d.g), compose(d.hp, d.h));
    REQUIRE(m.source == p.apex);
    REQUIRE(m.target == pp.apex);
    REQUIRE(compose(m, p.leg_g) == compose(pp.leg_g, d.gp));
    REQUIRE(compose(m, p.leg_h) == compose(pp.leg_h, d.hp));
  }
}

TEST_CASE("permutation relabeling yields an isomorphic monomorphism") {
  Rng rng(88);
  const SimpleGraph g = random_graph(rng, 7);
  const auto perm = random_permutation(rng, 7);
  const GraphMorphism m = permutation_morphism(g, perm);
  REQUIRE(is_monomorphism(m));
  REQUIRE(m.target.edge_count() == g.edge_count());
}
