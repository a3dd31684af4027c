#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spined/category.hpp"
#include "spined/errors.hpp"

namespace spined {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph: irreflexive, no multiedges. Canonical storage:
// each edge once with endpoints in increasing order, edge set sorted.
// Equality is canonical-form equality, not isomorphism.
class SimpleGraph {
public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
    degrees_.assign(vertex_count_, 0);
  }

  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count) {
    for (auto& [u, v] : edges) {
      if (u >= vertex_count_ || v >= vertex_count_)
        throw RangeError("edge endpoint out of range: (" + std::to_string(u) +
                         ", " + std::to_string(v) + ") with " +
                         std::to_string(vertex_count_) + " vertices");
      if (u == v)
        throw PreconditionViolation("self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    degrees_.assign(vertex_count_, 0);
    for (const auto& [u, v] : edges_) {
      ++degrees_[u];
      ++degrees_[v];
    }
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  std::size_t degree(Vertex v) const { return degrees_.at(v); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [a, b] : edges_) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const SimpleGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

  bool operator<(const SimpleGraph& other) const {
    if (vertex_count_ != other.vertex_count_)
      return vertex_count_ < other.vertex_count_;
    return edges_ < other.edges_;
  }

private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

inline SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u + 1 < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return SimpleGraph(n, std::move(edges));
}

inline bool is_complete_graph(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n > 0 ? n - 1 : 0) / 2;
}

// One 64-bit neighborhood mask per vertex. Desk-scale only.
inline std::vector<std::uint64_t> adjacency_bits(const SimpleGraph& g) {
  if (g.vertex_count() > 64)
    throw BoundExceeded("bitset algorithms support at most 64 vertices, got " +
                        std::to_string(g.vertex_count()));
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

inline std::string describe_graph(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph(n=" << g.vertex_count() << "; ";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << " ";
    os << u << "-" << v;
    first = false;
  }
  os << ")";
  return os.str();
}

// A vertex map between graphs. Morphism equality is pointwise on the
// underlying data, including the (canonical) endpoints.
struct GraphMorphism {
  SimpleGraph source;
  SimpleGraph target;
  std::vector<Vertex> vertex_map;  // length = source.vertex_count()

  bool operator==(const GraphMorphism& other) const = default;
};

enum class HomCheck {
  Ok,
  MapSizeMismatch,
  VertexOutOfRange,
  EdgeCollapsed,      // an edge's endpoints map to one vertex (loops forbidden)
  EdgeNotPreserved,
  NotInjective,
};

inline const char* to_string(HomCheck c) {
  switch (c) {
    case HomCheck::Ok: return "ok";
    case HomCheck::MapSizeMismatch: return "map size mismatch";
    case HomCheck::VertexOutOfRange: return "vertex out of range";
    case HomCheck::EdgeCollapsed: return "edge collapsed to a vertex";
    case HomCheck::EdgeNotPreserved: return "edge not preserved";
    case HomCheck::NotInjective: return "vertex map not injective";
  }
  return "unknown";
}

// First violated homomorphism condition, or Ok.
inline HomCheck check_homomorphism(const GraphMorphism& m) {
  if (m.vertex_map.size() != m.source.vertex_count())
    return HomCheck::MapSizeMismatch;
  for (Vertex image : m.vertex_map)
    if (image >= m.target.vertex_count()) return HomCheck::VertexOutOfRange;
  for (const auto& [u, v] : m.source.edges()) {
    const Vertex a = m.vertex_map[u];
    const Vertex b = m.vertex_map[v];
    if (a == b) return HomCheck::EdgeCollapsed;
    if (!m.target.has_edge(a, b)) return HomCheck::EdgeNotPreserved;
  }
  return HomCheck::Ok;
}

// Homomorphism plus injectivity. In a category of simple graphs the
// monomorphisms are exactly the injective homomorphisms.
inline HomCheck check_monomorphism(const GraphMorphism& m) {
  const HomCheck hom = check_homomorphism(m);
  if (hom != HomCheck::Ok) return hom;
  std::vector<std::uint8_t> used(m.target.vertex_count(), 0);
  for (Vertex image : m.vertex_map) {
    if (used[image]) return HomCheck::NotInjective;
    used[image] = 1;
  }
  return HomCheck::Ok;
}

inline bool validate_homomorphism(const GraphMorphism& m) {
  return check_homomorphism(m) == HomCheck::Ok;
}

inline bool is_monomorphism(const GraphMorphism& m) {
  return check_monomorphism(m) == HomCheck::Ok;
}

inline GraphMorphism identity_morphism(const SimpleGraph& g) {
  std::vector<Vertex> map(g.vertex_count());
  std::iota(map.begin(), map.end(), 0);
  return {g, g, std::move(map)};
}

// outer after inner (inner is applied first).
inline GraphMorphism compose(const GraphMorphism& outer,
                             const GraphMorphism& inner) {
  if (!(inner.target == outer.source))
    throw PreconditionViolation(
        "composition mismatch: inner target differs from outer source");
  std::vector<Vertex> map(inner.vertex_map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Vertex mid = inner.vertex_map[i];
    if (mid >= outer.vertex_map.size())
      throw PreconditionViolation("composition over an invalid morphism");
    map[i] = outer.vertex_map[mid];
  }
  return {inner.source, outer.target, std::move(map)};
}

struct MonomorphismEnumeration {
  std::vector<GraphMorphism> morphisms;
  bool truncated = false;  // stopped at the requested limit
};

namespace detail {

struct MonoSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<std::uint8_t> h_adj;               // nh x nh adjacency matrix
  std::vector<std::vector<Vertex>> earlier;      // source neighbors j < i
  std::vector<Vertex> map;
  std::vector<std::uint8_t> used;
  std::optional<std::size_t> limit;
  MonomorphismEnumeration* out;

  MonoSearch(const SimpleGraph& g_, const SimpleGraph& h_,
             std::optional<std::size_t> limit_, MonomorphismEnumeration* out_)
      : g(g_), h(h_), limit(limit_), out(out_) {
    const std::size_t nh = h.vertex_count();
    h_adj.assign(nh * nh, 0);
    for (const auto& [u, v] : h.edges()) {
      h_adj[u * nh + v] = 1;
      h_adj[v * nh + u] = 1;
    }
    earlier.resize(g.vertex_count());
    for (const auto& [u, v] : g.edges()) earlier[v].push_back(u);  // u < v
    map.assign(g.vertex_count(), 0);
    used.assign(nh, 0);
  }

  // Returns false when the enumeration stopped at the limit.
  bool run(std::size_t depth) {
    if (depth == g.vertex_count()) {
      out->morphisms.push_back({g, h, map});
      return !limit || out->morphisms.size() < *limit;
    }
    const std::size_t nh = h.vertex_count();
    for (Vertex t = 0; t < nh; ++t) {
      if (used[t]) continue;
      if (h.degree(t) < g.degree(static_cast<Vertex>(depth))) continue;
      bool consistent = true;
      for (Vertex j : earlier[depth]) {
        if (!h_adj[map[j] * nh + t]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      map[depth] = t;
      used[t] = 1;
      const bool keep_going = run(depth + 1);
      used[t] = 0;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace detail

// All injective homomorphisms g -> h, by backtracking with degree and
// neighborhood pruning, in lexicographic vertex_map order.
inline MonomorphismEnumeration enumerate_monomorphisms(
    const SimpleGraph& g, const SimpleGraph& h,
    std::optional<std::size_t> limit = std::nullopt) {
  MonomorphismEnumeration out;
  if (g.vertex_count() > h.vertex_count()) return out;
  if (limit && *limit == 0) {
    out.truncated = true;
    return out;
  }
  detail::MonoSearch search(g, h, limit, &out);
  out.truncated = !search.run(0);
  return out;
}

inline bool exists_monomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  return !enumerate_monomorphisms(g, h, 1).morphisms.empty();
}

// Least n admitting a monomorphism into the complete graph on n
// vertices: the vertex count.
inline std::size_t spine_index(const SimpleGraph& g) {
  return g.vertex_count();
}

using GraphPushout = ProxyPushout<SimpleGraph, GraphMorphism>;

namespace detail {

inline void require_spine_mono(const GraphMorphism& m, const char* role) {
  const HomCheck c = check_monomorphism(m);
  if (c != HomCheck::Ok)
    throw PreconditionViolation(std::string(role) +
                                " is not a monomorphism: " + to_string(c));
  if (!is_complete_graph(m.source))
    throw PreconditionViolation(std::string(role) +
                                " does not have a complete-graph source");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Clique-sum of g: K_n -> G and h: K_n -> H: the disjoint union of G
// and H with g(v) identified with h(v) for every spine vertex v. The
// edge set is the union of the images. Vertices are reindexed in
// increasing order of (component, original index), so the G-leg is the
// identity on indices.
inline GraphPushout clique_sum_pushout(const GraphMorphism& g,
                                       const GraphMorphism& h) {
  detail::require_spine_mono(g, "g");
  detail::require_spine_mono(h, "h");
  if (!(g.source == h.source))
    throw PreconditionViolation("g and h do not share their spine source");

  const std::size_t n = g.source.vertex_count();
  const std::size_t ng = g.target.vertex_count();
  const std::size_t nh = h.target.vertex_count();

  detail::UnionFind uf(ng + nh);
  for (std::size_t v = 0; v < n; ++v)
    uf.unite(ng + h.vertex_map[v], g.vertex_map[v]);

  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> class_id(ng + nh, kUnset);
  std::vector<Vertex> new_id(ng + nh, 0);
  Vertex next = 0;
  for (std::size_t i = 0; i < ng + nh; ++i) {
    const std::size_t r = uf.find(i);
    if (class_id[r] == kUnset) class_id[r] = next++;
    new_id[i] = class_id[r];
  }

  std::vector<Edge> edges;
  edges.reserve(g.target.edge_count() + h.target.edge_count());
  for (const auto& [u, v] : g.target.edges())
    edges.push_back({new_id[u], new_id[v]});
  for (const auto& [u, v] : h.target.edges())
    edges.push_back({new_id[ng + u], new_id[ng + v]});
  SimpleGraph apex(next, std::move(edges));

  std::vector<Vertex> leg_g_map(new_id.begin(), new_id.begin() + ng);
  std::vector<Vertex> leg_h_map(new_id.begin() + ng, new_id.end());
  GraphMorphism leg_g{g.target, apex, std::move(leg_g_map)};
  GraphMorphism leg_h{h.target, apex, std::move(leg_h_map)};
  return {std::move(apex), std::move(leg_g), std::move(leg_h)};
}

// The morphism P(g,h) -> P(g'g, h'h) acting as g' on the G-part and h'
// on the H-part of the glued vertex set.
inline GraphMorphism mediating_morphism(const GraphMorphism& g,
                                        const GraphMorphism& h,
                                        const GraphMorphism& gp,
                                        const GraphMorphism& hp) {
  detail::require_spine_mono(g, "g");
  detail::require_spine_mono(h, "h");
  if (check_monomorphism(gp) != HomCheck::Ok ||
      check_monomorphism(hp) != HomCheck::Ok)
    throw PreconditionViolation("g' and h' must be monomorphisms");

  const GraphPushout p = clique_sum_pushout(g, h);
  const GraphPushout pp = clique_sum_pushout(compose(gp, g), compose(hp, h));

  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(p.apex.vertex_count(), kUnset);
  for (std::size_t u = 0; u < g.target.vertex_count(); ++u)
    map[p.leg_g.vertex_map[u]] = pp.leg_g.vertex_map[gp.vertex_map[u]];
  for (std::size_t w = 0; w < h.target.vertex_count(); ++w) {
    const Vertex slot = p.leg_h.vertex_map[w];
    const Vertex value = pp.leg_h.vertex_map[hp.vertex_map[w]];
    if (map[slot] != kUnset && map[slot] != value)
      throw ConstructionInconsistent(
          "G- and H-side actions disagree on identified vertex " +
          std::to_string(slot));
    map[slot] = value;
  }
  return {p.apex, pp.apex, std::move(map)};
}

// The spined-category instance with simple graphs as objects, injective
// homomorphisms as arrows, complete graphs as the spine and clique-sums
// as proxy pushouts.
class GraphCategory {
public:
  using Object = SimpleGraph;
  using Morphism = GraphMorphism;

  Morphism identity(const Object& x) const { return identity_morphism(x); }

  Morphism compose(const Morphism& outer, const Morphism& inner) const {
    return spined::compose(outer, inner);
  }

  bool is_valid_morphism(const Morphism& m) const { return is_monomorphism(m); }

  Object source(const Morphism& m) const { return m.source; }
  Object target(const Morphism& m) const { return m.target; }

  Object spine(std::size_t n) const { return complete_graph(n); }

  std::size_t spine_index(const Object& x) const {
    return spined::spine_index(x);
  }

  ProxyPushout<Object, Morphism> proxy_pushout(const Morphism& g,
                                               const Morphism& h) const {
    return clique_sum_pushout(g, h);
  }

  Morphism mediating(const Morphism& g, const Morphism& h, const Morphism& gp,
                     const Morphism& hp) const {
    return mediating_morphism(g, h, gp, hp);
  }

  std::vector<Morphism> enumerate_morphisms(const Object& x, const Object& y,
                                            std::size_t limit) const {
    std::optional<std::size_t> cap;
    if (limit != kNoLimit) cap = limit;
    return enumerate_monomorphisms(x, y, cap).morphisms;
  }

  bool exists_morphism(const Object& x, const Object& y) const {
    return exists_monomorphism(x, y);
  }

  std::string describe(const Object& x) const { return describe_graph(x); }
};

}  // namespace spined
