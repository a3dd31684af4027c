#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "spined/category.hpp"
#include "spined/chordal.hpp"
#include "spined/errors.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"

namespace spined {

// Two width conventions are in circulation: counting the largest
// clique of the best chordal completion, and the classical treewidth
// (the same number minus one). Both are exposed, always tagged.
enum class Convention {
  PaperMaxClique,     // size of the largest clique in the completion
  StandardTreewidth,  // classical treewidth
};

inline const char* to_string(Convention c) {
  switch (c) {
    case Convention::PaperMaxClique: return "paper-max-clique";
    case Convention::StandardTreewidth: return "standard-treewidth";
  }
  return "unknown";
}

struct WidthValue {
  std::size_t value = 0;
  Convention convention = Convention::PaperMaxClique;

  bool operator==(const WidthValue&) const = default;
};

// Conversion needs the vertex count: the max-clique value exceeds
// treewidth by one on nonempty graphs, while the empty graph is 0 in
// both conventions.
inline WidthValue convert(WidthValue w, Convention target,
                          std::size_t vertex_count) {
  if (w.convention == target) return w;
  if (vertex_count == 0) return {0, target};
  if (target == Convention::StandardTreewidth) {
    if (w.value == 0)
      throw PreconditionViolation(
          "max-clique width of a nonempty graph is at least 1");
    return {w.value - 1, target};
  }
  return {w.value + 1, target};
}

// The triangulation functor on graphs: the least width over chordal
// targets admitting a monomorphism from G. Any such target restricts
// to a chordal completion of G on G's own vertices of no larger
// width, so the minimum is realized by completions and the value is
// min_completion_width.
inline WidthValue delta_graph(const SimpleGraph& g,
                              WidthSearchMode mode = WidthSearchMode::Auto) {
  return {min_completion_width(g, mode), Convention::PaperMaxClique};
}

// Independent exact treewidth: dynamic programming over vertex
// subsets. f(S) is the least width of an elimination prefix consuming
// exactly S; eliminating v after S\{v} costs the number of vertices
// outside S reachable from v through S\{v}.
inline WidthValue treewidth_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 16)
    throw BoundExceeded("subset-DP oracle bounded to 16 vertices, got " +
                        std::to_string(n));
  if (n == 0) return {0, Convention::StandardTreewidth};

  const auto adj = adjacency_bits(g);
  const std::uint32_t full = static_cast<std::uint32_t>((1u << n) - 1);

  // vertices outside `inside` ∪ {v} reachable from v through `inside`
  const auto forward_degree = [&](std::uint32_t inside, Vertex v) {
    std::uint32_t visited = 1u << v;
    std::uint32_t frontier = 1u << v;
    std::uint32_t reached = 0;
    while (frontier) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const std::uint32_t nb =
          static_cast<std::uint32_t>(adj[u]) & full & ~visited;
      visited |= nb;
      frontier |= nb & inside;
      reached |= nb & ~inside & ~(1u << v);
    }
    return static_cast<std::size_t>(std::popcount(reached));
  };

  std::vector<std::size_t> dp(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::size_t best = n;  // any elimination is at most n-1 wide; n is safe
    std::uint32_t rest = s;
    while (rest) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      const std::uint32_t prev = s & ~(1u << v);
      best = std::min(best, std::max(dp[prev], forward_degree(prev, v)));
    }
    dp[s] = best;
  }
  return {dp[full], Convention::StandardTreewidth};
}

// Theorem-1 domination check: no S-functor exceeds Δ.
inline bool check_domination(const SimpleGraph& g,
                             const SFunctor<SimpleGraph>& f) {
  return f.value(g) <= delta_graph(g).value;
}

inline SFunctor<SimpleGraph> omega_sfunctor() {
  return {"omega", [](const SimpleGraph& g) { return clique_number(g); }};
}

inline SFunctor<SimpleGraph> delta_sfunctor() {
  return {"delta", [](const SimpleGraph& g) { return delta_graph(g).value; }};
}

// Candidate stream for the generic minimization on graphs: distinct
// fill-in completions over all elimination orderings, filtered to
// clique number at most the budget level. Complete because every
// optimal chordal target induces a completion of G itself.
struct GraphCompletionCandidates {
  void for_each(const SimpleGraph& g, std::size_t k,
                const std::function<bool(const SimpleGraph&)>& visit) const {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::set<SimpleGraph> seen;
    do {
      SimpleGraph completed = fill_in(g, {order}).completed;
      if (!seen.insert(completed).second) continue;
      if (clique_number(completed) > k) continue;
      if (!visit(completed)) return;
    } while (std::next_permutation(order.begin(), order.end()));
  }
};

// Generic triangulation computation: walk budget levels k = 0, 1, ...;
// at each level ask the candidate source for pseudo-chordal targets of
// value k and return the first k admitting a morphism from G. Assumes
// each level's candidate stream is finite.
template <SpinedCategory Category, typename Candidates>
std::size_t delta_generic(const Category& cat,
                          const typename Category::Object& g,
                          const SFunctor<typename Category::Object>& s,
                          const Candidates& candidates, std::size_t budget) {
  for (std::size_t k = 0; k <= budget; ++k) {
    bool found = false;
    candidates.for_each(
        g, k, [&](const typename Category::Object& candidate) {
          if (s.value(candidate) == k && cat.exists_morphism(g, candidate))
            found = true;
          return !found;
        });
    if (found) return k;
  }
  throw BudgetExhausted("no admissible target of value <= " +
                        std::to_string(budget) + " for " + cat.describe(g));
}

// Hypergraph triangulation via the primal graph: every clique of the
// best completion covering a hyperedge's pairs covers the hyperedge,
// so primal-graph width is hypergraph treewidth.
inline WidthValue hypergraph_delta(const Hypergraph& h,
                                   WidthSearchMode mode = WidthSearchMode::Auto) {
  return delta_graph(primal_graph(h), mode);
}

inline SFunctor<Hypergraph> hypergraph_delta_sfunctor() {
  return {"delta", [](const Hypergraph& h) { return hypergraph_delta(h).value; }};
}

}  // namespace spined
