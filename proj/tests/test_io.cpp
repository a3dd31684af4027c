#include <catch2/catch_amalgamated.hpp>

#include "spined/families.hpp"
#include "spined/io.hpp"
#include "spined/populations.hpp"
#include "spined/rng.hpp"

using namespace spined;

TEST_CASE("edge lists parse with comments and blank lines") {
  REQUIRE(parse_edge_list("3\n0 1\n1 2\n") == path_graph(3));
  REQUIRE(parse_edge_list("# leading comment\n\n 4 \n0 1\n\n# mid\n2 3\n") ==
          SimpleGraph(4, {{0, 1}, {2, 3}}));
  REQUIRE(parse_edge_list("0\n") == SimpleGraph(0));
}

TEST_CASE("edge-list errors carry line and column") {
  try {
    parse_edge_list("3\n0 one\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
    REQUIRE(e.column() == 3);
  }
  REQUIRE_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
  REQUIRE_THROWS_AS(parse_edge_list("3\n0 3\n"), RangeError);
  REQUIRE_THROWS_AS(parse_edge_list("3\n1 1\n"), PreconditionViolation);
}

TEST_CASE("DIMACS files parse with 1-based endpoints") {
  REQUIRE(parse_dimacs("c a path\np edge 3 2\ne 1 2\ne 2 3\n") ==
          path_graph(3));
  REQUIRE(parse_dimacs("p edge 4 0\n") == SimpleGraph(4));

  REQUIRE_THROWS_AS(parse_dimacs("e 1 2\np edge 3 1\n"), ParseError);
  REQUIRE_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_dimacs("p edge 3 1\ne 0 2\n"), RangeError);
  REQUIRE_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), RangeError);
  REQUIRE_THROWS_AS(parse_dimacs("p clique 3 1\ne 1 2\n"), ParseError);
  REQUIRE_THROWS_AS(parse_dimacs("q edge 3 0\n"), ParseError);
  REQUIRE_THROWS_AS(parse_dimacs(""), ParseError);
}

TEST_CASE("JSON graphs parse and reject malformed shapes") {
  REQUIRE(parse_graph_json(R"({"vertices": 3, "edges": [[0,1],[1,2]]})") ==
          path_graph(3));
  REQUIRE(parse_graph_json(R"({"vertices": 2, "edges": []})") ==
          SimpleGraph(2));

  REQUIRE_THROWS_AS(parse_graph_json("{"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json("[]"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json(R"({"vertices": 3})"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json(R"({"vertices": -1, "edges": []})"),
                    ParseError);
  REQUIRE_THROWS_AS(
      parse_graph_json(R"({"vertices": 3, "edges": [[0,1,2]]})"), ParseError);
  REQUIRE_THROWS_AS(parse_graph_json(R"({"vertices": 3, "edges": [[0,9]]})"),
                    RangeError);
}

TEST_CASE("all graph formats round-trip") {
  Rng rng(7777);
  for (int i = 0; i < 25; ++i) {
    const SimpleGraph g = random_graph(rng, rng.below(9));
    for (const GraphFormat format :
         {GraphFormat::EdgeList, GraphFormat::Dimacs, GraphFormat::Json}) {
      REQUIRE(parse_graph(emit_graph(g, format), format) == g);
    }
  }
}

TEST_CASE("hypergraph text format parses and round-trips") {
  const Hypergraph h = parse_hypergraph_text("4\n0 1 2\n2 3\n");
  REQUIRE(h == Hypergraph(4, {{0, 1, 2}, {2, 3}}));
  REQUIRE(parse_hypergraph_text("3\n") == Hypergraph(3));
  REQUIRE_THROWS_AS(parse_hypergraph_text("3\n0 4\n"), RangeError);
  REQUIRE_THROWS_AS(parse_hypergraph_text(""), ParseError);

  Rng rng(505);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = rng.below(6);
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t e = 0; e < rng.below(4) && n > 0; ++e) {
      std::vector<Vertex> edge;
      for (Vertex v = 0; v < n; ++v)
        if (rng.coin()) edge.push_back(v);
      if (!edge.empty()) edges.push_back(std::move(edge));
    }
    const Hypergraph h2(n, std::move(edges));
    for (const HypergraphFormat format :
         {HypergraphFormat::Text, HypergraphFormat::Json}) {
      REQUIRE(parse_hypergraph(emit_hypergraph(h2, format), format) == h2);
    }
  }
}

TEST_CASE("hypergraph JSON parses and rejects malformed shapes") {
  REQUIRE(parse_hypergraph_json(
              R"({"vertices": 3, "hyperedges": [[0,1,2],[0]]})") ==
          Hypergraph(3, {{0, 1, 2}, {0}}));
  REQUIRE_THROWS_AS(parse_hypergraph_json(R"({"vertices": 3})"), ParseError);
  REQUIRE_THROWS_AS(
      parse_hypergraph_json(R"({"vertices": 3, "hyperedges": [0]})"),
      ParseError);
  REQUIRE_THROWS_AS(
      parse_hypergraph_json(R"({"vertices": 3, "hyperedges": [[7]]})"),
      RangeError);
}

TEST_CASE("JSON parse errors report their position") {
  try {
    parse_graph_json("{\"vertices\": 3,\n  \"edges\": [[0,1],]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
  }
}

TEST_CASE("law reports serialize with the pinned keys") {
  LawReport report{"SC1", 12, {{"case-a", "went wrong"}}, 3};
  const nlohmann::json j = law_report_to_json(report);
  REQUIRE(j.size() == 4);
  REQUIRE(j["law"] == "SC1");
  REQUIRE(j["population_size"] == 12);
  REQUIRE(j["enumeration_bound"] == 3);
  REQUIRE(j["failures"].size() == 1);
  REQUIRE(j["failures"][0]["case"] == "case-a");
  REQUIRE(j["failures"][0]["detail"] == "went wrong");
}
