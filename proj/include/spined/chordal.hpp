#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spined/errors.hpp"
#include "spined/graph.hpp"

namespace spined {

struct EliminationOrdering {
  std::vector<Vertex> order;  // a permutation of [0, vertex_count)

  bool operator==(const EliminationOrdering&) const = default;
};

inline bool is_valid_ordering(const SimpleGraph& g,
                              const EliminationOrdering& ordering) {
  if (ordering.order.size() != g.vertex_count()) return false;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (Vertex v : ordering.order) {
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrdering> peo;  // set when chordal
};

// Chordality via maximum-cardinality search: visit the vertex with the
// most already-visited neighbours (smallest index on ties); the reverse
// visit order is a perfect elimination ordering iff the graph is
// chordal. The PEO condition is verified directly: each vertex's later
// neighbours must form a clique.
inline ChordalityResult is_chordal(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {true, EliminationOrdering{{}}};
  const auto adj = adjacency_bits(g);

  std::vector<std::size_t> weight(n, 0);
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = 0;
    bool have = false;
    Vertex pick = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!have || weight[v] > best) {
        have = true;
        best = weight[v];
        pick = v;
      }
    }
    visited[pick] = 1;
    visit.push_back(pick);
    std::uint64_t nb = adj[pick];
    while (nb) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(nb));
      nb &= nb - 1;
      if (!visited[u]) ++weight[u];
    }
  }

  EliminationOrdering ordering{{visit.rbegin(), visit.rend()}};
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ordering.order[i]] = i;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t later = 0;
    std::uint64_t nb = adj[v];
    while (nb) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(nb));
      nb &= nb - 1;
      if (pos[u] > pos[v]) later |= std::uint64_t{1} << u;
    }
    std::uint64_t rest = later;
    while (rest) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      if ((later & ~(std::uint64_t{1} << u)) & ~adj[u]) return {false, {}};
    }
  }
  return {true, std::move(ordering)};
}

namespace detail {

// True when the cycle (as a vertex sequence) has an edge between two
// non-consecutive members.
inline bool cycle_has_chord(const std::vector<Vertex>& cycle,
                            const std::vector<std::uint64_t>& adj) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // consecutive around the cycle
      if (adj[cycle[i]] & (std::uint64_t{1} << cycle[j])) return true;
    }
  }
  return false;
}

struct CycleScan {
  const std::vector<std::uint64_t>& adj;
  std::vector<Vertex> path;
  std::uint64_t on_path = 0;
  bool found_chordless = false;

  // Enumerates simple cycles whose minimum vertex is path[0]; each
  // cycle is visited once (direction fixed by path[1] < last).
  void dfs(Vertex v) {
    if (found_chordless) return;
    std::uint64_t nb = adj[v];
    while (nb) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(nb));
      nb &= nb - 1;
      if (w == path[0] && path.size() >= 4) {
        if (path[1] < path.back() && !cycle_has_chord(path, adj)) {
          found_chordless = true;
          return;
        }
      } else if (w > path[0] && !(on_path & (std::uint64_t{1} << w))) {
        path.push_back(w);
        on_path |= std::uint64_t{1} << w;
        dfs(w);
        on_path &= ~(std::uint64_t{1} << w);
        path.pop_back();
        if (found_chordless) return;
      }
    }
  }
};

}  // namespace detail

// Independent chordality oracle: enumerate every cycle with at least
// four vertices and check it has a chord. Exponential; desk scale only.
inline bool is_chordal_bruteforce(const SimpleGraph& g,
                                  std::size_t max_vertices = 10) {
  if (g.vertex_count() > max_vertices)
    throw BoundExceeded("cycle-scan oracle bounded to " +
                        std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  const auto adj = adjacency_bits(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    detail::CycleScan scan{adj, {s}, std::uint64_t{1} << s};
    scan.dfs(s);
    if (scan.found_chordless) return false;
  }
  return true;
}

namespace detail {

struct BronKerbosch {
  const std::vector<std::uint64_t>& adj;
  std::size_t best = 0;

  void run(std::size_t r_size, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      best = std::max(best, r_size);
      return;
    }
    if (r_size + static_cast<std::size_t>(std::popcount(p)) <= best) return;
    // pivot with the most candidates among p
    std::uint64_t px = p | x;
    Vertex pivot = 0;
    int pivot_cover = -1;
    std::uint64_t scan = px;
    while (scan) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(scan));
      scan &= scan - 1;
      const int cover = std::popcount(p & adj[u]);
      if (cover > pivot_cover) {
        pivot_cover = cover;
        pivot = u;
      }
    }
    std::uint64_t ext = p & ~adj[pivot];
    while (ext) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(ext));
      ext &= ext - 1;
      const std::uint64_t bit = std::uint64_t{1} << v;
      run(r_size + 1, p & adj[v], x & adj[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace detail

// Size of the largest complete subgraph, by Bron-Kerbosch with
// pivoting. The empty graph has clique number 0.
inline std::size_t clique_number(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const auto adj = adjacency_bits(g);
  detail::BronKerbosch bk{adj};
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bk.run(0, all, 0);
  return bk.best;
}

struct ChordalCompletion {
  SimpleGraph base;
  std::vector<Edge> fill_edges;  // disjoint from base.edges()
  SimpleGraph completed;         // base plus fill, chordal
};

// Eliminate vertices in the given order; at each step make the current
// vertex's remaining neighbours a clique. The ordering is a PEO of the
// completed graph.
inline ChordalCompletion fill_in(const SimpleGraph& g,
                                 const EliminationOrdering& ordering) {
  if (!is_valid_ordering(g, ordering))
    throw PreconditionViolation("ordering is not a permutation of the vertices");
  const std::size_t n = g.vertex_count();
  auto adj = adjacency_bits(g);
  std::uint64_t remaining =
      n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  std::vector<Edge> fill;
  for (Vertex v : ordering.order) {
    remaining &= ~(std::uint64_t{1} << v);
    std::uint64_t later = adj[v] & remaining;
    std::uint64_t rest = later;
    while (rest) {
      const Vertex a = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      std::uint64_t higher = later & ~((std::uint64_t{2} << a) - 1);
      while (higher) {
        const Vertex b = static_cast<Vertex>(std::countr_zero(higher));
        higher &= higher - 1;
        if (!(adj[a] & (std::uint64_t{1} << b))) {
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
          fill.push_back({a, b});
        }
      }
    }
  }
  std::sort(fill.begin(), fill.end());
  std::vector<Edge> all_edges = g.edges();
  all_edges.insert(all_edges.end(), fill.begin(), fill.end());
  SimpleGraph completed(n, std::move(all_edges));
  return {g, std::move(fill), std::move(completed)};
}

enum class WidthSearchMode {
  Auto,            // exhaustive up to 8 vertices, branch-and-bound above
  Exhaustive,
  BranchAndBound,
};

namespace detail {

struct WidthSearch {
  std::vector<std::uint64_t> adj;
  std::size_t best;
  bool prune;

  bool is_clique(std::uint64_t set) const {
    std::uint64_t rest = set;
    while (rest) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      if ((set & ~(std::uint64_t{1} << v)) & ~adj[v]) return false;
    }
    return true;
  }

  void run(std::uint64_t remaining, std::size_t running) {
    if (remaining == 0) {
      best = std::min(best, running);
      return;
    }
    if (prune) {
      if (running >= best) return;
      // once the remainder is a clique, every ordering of it finishes
      // at the same width
      if (is_clique(remaining)) {
        best = std::min(
            best, std::max(running,
                           static_cast<std::size_t>(std::popcount(remaining))));
        return;
      }
    }

    std::vector<Vertex> candidates;
    std::uint64_t scan = remaining;
    while (scan) {
      candidates.push_back(static_cast<Vertex>(std::countr_zero(scan)));
      scan &= scan - 1;
    }
    if (prune) {
      // smallest-degree-first
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](Vertex a, Vertex b) {
                         return std::popcount(adj[a] & remaining) <
                                std::popcount(adj[b] & remaining);
                       });
    }

    for (Vertex v : candidates) {
      const std::uint64_t rest = remaining & ~(std::uint64_t{1} << v);
      const std::uint64_t later = adj[v] & rest;
      const std::size_t width = std::max(
          running, static_cast<std::size_t>(std::popcount(later)) + 1);
      if (prune && width >= best) continue;

      Edge added[64 * 63 / 2];
      std::size_t added_count = 0;
      std::uint64_t outer = later;
      while (outer) {
        const Vertex a = static_cast<Vertex>(std::countr_zero(outer));
        outer &= outer - 1;
        std::uint64_t inner = later & ~((std::uint64_t{2} << a) - 1) & ~adj[a];
        while (inner) {
          const Vertex b = static_cast<Vertex>(std::countr_zero(inner));
          inner &= inner - 1;
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
          added[added_count++] = {a, b};
        }
      }

      run(rest, width);

      for (std::size_t i = 0; i < added_count; ++i) {
        const auto [a, b] = added[i];
        adj[a] &= ~(std::uint64_t{1} << b);
        adj[b] &= ~(std::uint64_t{1} << a);
      }
      if (prune && best <= running) return;  // cannot improve below here
    }
  }
};

}  // namespace detail

// Minimum over elimination orderings of the largest clique of the
// induced chordal completion. This is the max-clique width convention;
// it equals standard treewidth + 1 on nonempty graphs. Exhaustive over
// all orderings for small graphs, branch-and-bound with best-so-far
// pruning above that.
inline std::size_t min_completion_width(
    const SimpleGraph& g, WidthSearchMode mode = WidthSearchMode::Auto) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const bool prune = mode == WidthSearchMode::BranchAndBound ||
                     (mode == WidthSearchMode::Auto && n > 8);
  detail::WidthSearch search{adjacency_bits(g), n, prune};
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.run(all, 0);
  return search.best;
}

}  // namespace spined
