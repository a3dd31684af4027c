#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "spined/errors.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"
#include "spined/laws.hpp"
#include "spined/rng.hpp"

namespace spined {

// Every labeled graph on exactly n vertices (2^(n choose 2) of them),
// in increasing edge-mask order.
inline std::vector<SimpleGraph> all_graphs_on(std::size_t n) {
  if (n > 6)
    throw BoundExceeded("exhaustive graph enumeration bounded to 6 vertices");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u + 1 < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<SimpleGraph> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size());
       ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) edges.push_back(pairs[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline std::vector<SimpleGraph> all_graphs_up_to(std::size_t n) {
  std::vector<SimpleGraph> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto batch = all_graphs_on(k);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

// G(n, 1/2): one coin per vertex pair.
inline SimpleGraph random_graph(Rng& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.coin()) edges.push_back({u, v});
  return SimpleGraph(n, std::move(edges));
}

// Uniform labeled tree via a random Prüfer sequence.
inline SimpleGraph random_tree(Rng& rng, std::size_t n) {
  if (n <= 1) return SimpleGraph(n);
  if (n == 2) return SimpleGraph(2, {{0, 1}});
  std::vector<Vertex> pruefer(n - 2);
  for (auto& p : pruefer) p = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> remaining_degree(n, 1);
  for (Vertex p : pruefer) ++remaining_degree[p];
  std::vector<Edge> edges;
  for (Vertex p : pruefer) {
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (remaining_degree[leaf] == 1) {
        edges.push_back({leaf, p});
        --remaining_degree[leaf];
        --remaining_degree[p];
        break;
      }
    }
  }
  Vertex last[2];
  std::size_t found = 0;
  for (Vertex v = 0; v < n && found < 2; ++v)
    if (remaining_degree[v] == 1) last[found++] = v;
  edges.push_back({last[0], last[1]});
  return SimpleGraph(n, std::move(edges));
}

// Fisher-Yates shuffle of the identity.
inline std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

// The graph with vertex v relabeled to perm[v].
inline SimpleGraph apply_permutation(const SimpleGraph& g,
                                     const std::vector<Vertex>& perm) {
  if (perm.size() != g.vertex_count())
    throw PreconditionViolation("permutation size must match vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

// The isomorphism g -> apply_permutation(g, perm) as a morphism.
inline GraphMorphism permutation_morphism(const SimpleGraph& g,
                                          const std::vector<Vertex>& perm) {
  return {g, apply_permutation(g, perm), perm};
}

// A monomorphism from g into a random supergraph: append extra
// vertices, keep g's edges, flip a coin for every pair not inside g,
// then relabel everything by a random permutation.
inline GraphMorphism random_supergraph(Rng& rng, const SimpleGraph& g,
                                       std::size_t extra_vertices) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = n + extra_vertices;
  std::vector<Edge> edges = g.edges();
  for (Vertex u = 0; u + 1 < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) {
      if (v < n) continue;  // pair inside g: keep as-is
      if (rng.coin()) edges.push_back({u, v});
    }
  const SimpleGraph enlarged(m, std::move(edges));
  const auto perm = random_permutation(rng, m);
  const SimpleGraph target = apply_permutation(enlarged, perm);
  std::vector<Vertex> map(perm.begin(), perm.begin() + n);
  return {g, target, std::move(map)};
}

// A random monomorphism K_n -> (random graph on `size` vertices forced
// to contain the clique): the spine image is a random injective tuple.
inline GraphMorphism random_spine_embedding(Rng& rng, std::size_t n,
                                            std::size_t size) {
  if (size < n)
    throw PreconditionViolation("target must have at least n vertices");
  const auto perm = random_permutation(rng, size);
  std::vector<Vertex> image(perm.begin(), perm.begin() + n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < size; ++u)
    for (Vertex v = u + 1; v < size; ++v)
      if (rng.coin()) edges.push_back({u, v});
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({image[i], image[j]});
  SimpleGraph target(size, std::move(edges));
  return {complete_graph(n), std::move(target), std::move(image)};
}

// A random clique-sum span (g, h) out of a shared spine K_n, with part
// sizes at most max_part_vertices.
inline std::pair<GraphMorphism, GraphMorphism> random_clique_sum_span(
    Rng& rng, std::size_t max_part_vertices) {
  const std::size_t cap = std::max<std::size_t>(max_part_vertices, 1);
  const std::size_t n = rng.below(std::min<std::size_t>(cap, 4) + 1);
  const std::size_t a = n + rng.below(cap - n + 1);
  const std::size_t b = n + rng.below(cap - n + 1);
  auto g = random_spine_embedding(rng, n, a);
  auto h = random_spine_embedding(rng, n, b);
  return {std::move(g), std::move(h)};
}

// A random SC2 diagram: a clique-sum span plus monomorphisms extending
// each part into a random supergraph.
inline Sc2Diagram<GraphMorphism> random_sc2_diagram(
    Rng& rng, std::size_t max_part_vertices, std::size_t max_extra = 2) {
  auto [g, h] = random_clique_sum_span(rng, max_part_vertices);
  auto gp = random_supergraph(rng, g.target, rng.below(max_extra + 1));
  auto hp = random_supergraph(rng, h.target, rng.below(max_extra + 1));
  return {std::move(g), std::move(h), std::move(gp), std::move(hp)};
}

// Every hypergraph on exactly n vertices: one per subset of the
// nonempty vertex subsets. 2^(2^n - 1) of them, so n is capped at 4.
inline std::vector<Hypergraph> all_hypergraphs_on(std::size_t n) {
  if (n > 4)
    throw BoundExceeded(
        "exhaustive hypergraph enumeration bounded to 4 vertices");
  std::vector<std::vector<Vertex>> subsets;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) subset.push_back(v);
    subsets.push_back(std::move(subset));
  }
  std::vector<Hypergraph> out;
  out.reserve(std::size_t{1} << subsets.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << subsets.size());
       ++mask) {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) edges.push_back(subsets[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace spined
