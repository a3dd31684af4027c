#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spined/category.hpp"
#include "spined/errors.hpp"
#include "spined/graph.hpp"

namespace spined {

// A finite hypergraph: dense vertex indices plus a set of nonempty
// vertex subsets. Canonical storage: each hyperedge sorted and
// deduplicated, the hyperedge list sorted and deduplicated.
class Hypergraph {
public:
  Hypergraph() = default;

  explicit Hypergraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  Hypergraph(std::size_t vertex_count,
             std::vector<std::vector<Vertex>> hyperedges)
      : vertex_count_(vertex_count), hyperedges_(std::move(hyperedges)) {
    for (auto& e : hyperedges_) {
      if (e.empty())
        throw PreconditionViolation("hyperedges must be nonempty");
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (e.back() >= vertex_count_)
        throw RangeError("hyperedge vertex " + std::to_string(e.back()) +
                         " out of range for " + std::to_string(vertex_count_) +
                         " vertices");
    }
    std::sort(hyperedges_.begin(), hyperedges_.end());
    hyperedges_.erase(std::unique(hyperedges_.begin(), hyperedges_.end()),
                      hyperedges_.end());
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  const std::vector<std::vector<Vertex>>& hyperedges() const {
    return hyperedges_;
  }

  bool operator==(const Hypergraph& other) const {
    return vertex_count_ == other.vertex_count_ &&
           hyperedges_ == other.hyperedges_;
  }

  bool operator<(const Hypergraph& other) const {
    if (vertex_count_ != other.vertex_count_)
      return vertex_count_ < other.vertex_count_;
    return hyperedges_ < other.hyperedges_;
  }

private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Vertex>> hyperedges_;
};

inline std::string describe_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "hypergraph(n=" << h.vertex_count() << "; ";
  bool first_edge = true;
  for (const auto& e : h.hyperedges()) {
    if (!first_edge) os << ", ";
    first_edge = false;
    os << "{";
    bool first_vertex = true;
    for (Vertex v : e) {
      if (!first_vertex) os << " ";
      first_vertex = false;
      os << v;
    }
    os << "}";
  }
  os << ")";
  return os.str();
}

// The spine object on n vertices: all 2-element subsets plus, for
// n >= 1, the full vertex set as one hyperedge. The pair skeleton makes
// the primal graph K_n; the full-set edge absorbs the image of any
// hyperedge of any n-vertex hypergraph, which is what SC1 needs.
inline Hypergraph hyper_spine(std::size_t n) {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex u = 0; u + 1 < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  if (n >= 1) {
    std::vector<Vertex> full(n);
    std::iota(full.begin(), full.end(), 0);
    edges.push_back(std::move(full));
  }
  return Hypergraph(n, std::move(edges));
}

// Gaifman graph: u ~ v iff some hyperedge contains both.
inline SimpleGraph primal_graph(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (const auto& e : h.hyperedges())
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        edges.push_back({e[i], e[j]});
  return SimpleGraph(h.vertex_count(), std::move(edges));
}

// A graph is the hypergraph whose hyperedges are its edges.
inline Hypergraph graph_as_hypergraph(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.vertex_count(), std::move(edges));
}

struct HypergraphMorphism {
  Hypergraph source;
  Hypergraph target;
  std::vector<Vertex> vertex_map;  // length = source.vertex_count()

  bool operator==(const HypergraphMorphism& other) const = default;
};

enum class HyperCheck {
  Ok,
  MapSizeMismatch,
  VertexOutOfRange,
  EdgeNotCovered,  // some hyperedge's image fits inside no target hyperedge
  NotInjective,
};

inline const char* to_string(HyperCheck c) {
  switch (c) {
    case HyperCheck::Ok: return "ok";
    case HyperCheck::MapSizeMismatch: return "map size mismatch";
    case HyperCheck::VertexOutOfRange: return "vertex out of range";
    case HyperCheck::EdgeNotCovered: return "hyperedge image not covered";
    case HyperCheck::NotInjective: return "not injective";
  }
  return "unknown";
}

// A morphism maps vertices so that the image of every source hyperedge
// is contained in some target hyperedge (containment, not equality).
inline HyperCheck check_homomorphism(const HypergraphMorphism& m) {
  if (m.vertex_map.size() != m.source.vertex_count())
    return HyperCheck::MapSizeMismatch;
  for (Vertex image : m.vertex_map)
    if (image >= m.target.vertex_count()) return HyperCheck::VertexOutOfRange;
  for (const auto& e : m.source.hyperedges()) {
    std::vector<Vertex> image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(m.vertex_map[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    bool covered = false;
    for (const auto& t : m.target.hyperedges()) {
      if (std::includes(t.begin(), t.end(), image.begin(), image.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) return HyperCheck::EdgeNotCovered;
  }
  return HyperCheck::Ok;
}

inline HyperCheck check_monomorphism(const HypergraphMorphism& m) {
  const HyperCheck hom = check_homomorphism(m);
  if (hom != HyperCheck::Ok) return hom;
  std::vector<std::uint8_t> used(m.target.vertex_count(), 0);
  for (Vertex image : m.vertex_map) {
    if (used[image]) return HyperCheck::NotInjective;
    used[image] = 1;
  }
  return HyperCheck::Ok;
}

inline bool validate_homomorphism(const HypergraphMorphism& m) {
  return check_homomorphism(m) == HyperCheck::Ok;
}

inline bool is_monomorphism(const HypergraphMorphism& m) {
  return check_monomorphism(m) == HyperCheck::Ok;
}

inline HypergraphMorphism identity_morphism(const Hypergraph& h) {
  std::vector<Vertex> map(h.vertex_count());
  std::iota(map.begin(), map.end(), 0);
  return {h, h, std::move(map)};
}

inline HypergraphMorphism compose(const HypergraphMorphism& outer,
                                  const HypergraphMorphism& inner) {
  if (!(inner.target == outer.source))
    throw PreconditionViolation(
        "composition mismatch: inner target differs from outer source");
  std::vector<Vertex> map(inner.vertex_map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Vertex mid = inner.vertex_map[i];
    if (mid >= outer.vertex_map.size())
      throw RangeError("intermediate vertex out of range in composition");
    map[i] = outer.vertex_map[mid];
  }
  return {inner.source, outer.target, std::move(map)};
}

struct HyperMonoEnumeration {
  std::vector<HypergraphMorphism> morphisms;
  bool truncated = false;
};

namespace detail {

inline std::uint64_t vertex_set_bits(const std::vector<Vertex>& vs,
                                     std::size_t vertex_count) {
  if (vertex_count > 64)
    throw BoundExceeded("bitset representation bounded to 64 vertices, got " +
                        std::to_string(vertex_count));
  std::uint64_t bits = 0;
  for (Vertex v : vs) bits |= std::uint64_t{1} << v;
  return bits;
}

struct HyperMonoSearch {
  const Hypergraph& g;
  const Hypergraph& h;
  std::optional<std::size_t> limit;
  HyperMonoEnumeration* out;

  std::vector<std::uint64_t> target_edge_bits;
  // hyperedges of g whose maximum vertex is v, as bitmasks
  std::vector<std::vector<std::uint64_t>> edges_closing_at;
  std::vector<Vertex> map;
  std::vector<std::uint8_t> used;

  HyperMonoSearch(const Hypergraph& g_, const Hypergraph& h_,
                  std::optional<std::size_t> limit_, HyperMonoEnumeration* out_)
      : g(g_), h(h_), limit(limit_), out(out_),
        edges_closing_at(g_.vertex_count()),
        map(g_.vertex_count(), 0), used(h_.vertex_count(), 0) {
    target_edge_bits.reserve(h.hyperedge_count());
    for (const auto& e : h.hyperedges())
      target_edge_bits.push_back(vertex_set_bits(e, h.vertex_count()));
    for (const auto& e : g.hyperedges())
      edges_closing_at[e.back()].push_back(
          vertex_set_bits(e, g.vertex_count()));
  }

  // Once vertex `depth` is assigned, every hyperedge whose last vertex
  // is `depth` is fully mapped and must fit inside some target edge.
  bool image_covered(std::size_t depth) const {
    for (std::uint64_t bits : edges_closing_at[depth]) {
      std::uint64_t image = 0;
      std::uint64_t rest = bits;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        image |= std::uint64_t{1} << map[static_cast<std::size_t>(v)];
      }
      bool covered = false;
      for (std::uint64_t t : target_edge_bits) {
        if ((image & ~t) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }

  // Returns false when truncated by the limit.
  bool run(std::size_t depth) {
    if (depth == g.vertex_count()) {
      out->morphisms.push_back({g, h, map});
      return !limit || out->morphisms.size() < *limit;
    }
    for (Vertex candidate = 0; candidate < h.vertex_count(); ++candidate) {
      if (used[candidate]) continue;
      map[depth] = candidate;
      if (!image_covered(depth)) continue;
      used[candidate] = 1;
      const bool keep_going = run(depth + 1);
      used[candidate] = 0;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace detail

// All injective morphisms G -> H in lexicographic vertex_map order,
// truncating after `limit` entries when given.
inline HyperMonoEnumeration enumerate_monomorphisms(
    const Hypergraph& g, const Hypergraph& h,
    std::optional<std::size_t> limit = std::nullopt) {
  HyperMonoEnumeration out;
  if (g.vertex_count() > h.vertex_count()) return out;
  if (limit && *limit == 0) {
    out.truncated = true;
    return out;
  }
  detail::HyperMonoSearch search(g, h, limit, &out);
  out.truncated = !search.run(0);
  return out;
}

inline bool exists_monomorphism(const Hypergraph& g, const Hypergraph& h) {
  return !enumerate_monomorphisms(g, h, 1).morphisms.empty();
}

// Least n with a monomorphism into hyper_spine(n): the identity vertex
// map works at n = vertex_count because the full-set spine edge covers
// every hyperedge image, and no injection exists into fewer vertices.
inline std::size_t spine_index(const Hypergraph& h) {
  return h.vertex_count();
}

using HypergraphPushout = ProxyPushout<Hypergraph, HypergraphMorphism>;

namespace detail {

inline void require_hyper_spine_mono(const HypergraphMorphism& m,
                                     const char* role) {
  const HyperCheck c = check_monomorphism(m);
  if (c != HyperCheck::Ok)
    throw PreconditionViolation(std::string(role) +
                                " must be a monomorphism: " + to_string(c));
  if (!(m.source == hyper_spine(m.source.vertex_count())))
    throw PreconditionViolation(std::string(role) +
                                " must have a spine object as source");
}

}  // namespace detail

// Glue the targets along the shared spine image: identify g(v) with
// h(v) for each spine vertex, reindex canonically in increasing
// (component, original index) order, and take the union of the two
// hyperedge images.
inline HypergraphPushout hyper_clique_sum(const HypergraphMorphism& g,
                                          const HypergraphMorphism& h) {
  detail::require_hyper_spine_mono(g, "g");
  detail::require_hyper_spine_mono(h, "h");
  if (!(g.source == h.source))
    throw PreconditionViolation("span legs must share their spine source");

  const std::size_t n = g.source.vertex_count();
  const std::size_t ng = g.target.vertex_count();
  const std::size_t nh = h.target.vertex_count();

  detail::UnionFind uf(ng + nh);
  for (std::size_t v = 0; v < n; ++v)
    uf.unite(g.vertex_map[v], ng + h.vertex_map[v]);

  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> class_id(ng + nh, kUnset);
  std::vector<Vertex> new_id(ng + nh, 0);
  Vertex next = 0;
  for (std::size_t i = 0; i < ng + nh; ++i) {
    const std::size_t root = uf.find(i);
    if (class_id[root] == kUnset) class_id[root] = next++;
    new_id[i] = class_id[root];
  }

  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.target.hyperedge_count() + h.target.hyperedge_count());
  for (const auto& e : g.target.hyperedges()) {
    std::vector<Vertex> image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(new_id[v]);
    edges.push_back(std::move(image));
  }
  for (const auto& e : h.target.hyperedges()) {
    std::vector<Vertex> image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(new_id[ng + v]);
    edges.push_back(std::move(image));
  }
  Hypergraph apex(next, std::move(edges));

  std::vector<Vertex> leg_g_map(new_id.begin(), new_id.begin() + ng);
  std::vector<Vertex> leg_h_map(new_id.begin() + ng, new_id.end());
  HypergraphMorphism leg_g{g.target, apex, std::move(leg_g_map)};
  HypergraphMorphism leg_h{h.target, apex, std::move(leg_h_map)};
  return {std::move(apex), std::move(leg_g), std::move(leg_h)};
}

// The arrow P(g,h) -> P(g'∘g, h'∘h) acting as g' on the G-part and h'
// on the H-part of the glued vertex set.
inline HypergraphMorphism hyper_mediating(const HypergraphMorphism& g,
                                          const HypergraphMorphism& h,
                                          const HypergraphMorphism& gp,
                                          const HypergraphMorphism& hp) {
  detail::require_hyper_spine_mono(g, "g");
  detail::require_hyper_spine_mono(h, "h");
  if (check_monomorphism(gp) != HyperCheck::Ok ||
      check_monomorphism(hp) != HyperCheck::Ok)
    throw PreconditionViolation("vertical extensions must be monomorphisms");

  const HypergraphPushout p = hyper_clique_sum(g, h);
  const HypergraphPushout pp = hyper_clique_sum(compose(gp, g), compose(hp, h));

  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(p.apex.vertex_count(), kUnset);
  for (std::size_t u = 0; u < g.target.vertex_count(); ++u)
    map[p.leg_g.vertex_map[u]] = pp.leg_g.vertex_map[gp.vertex_map[u]];
  for (std::size_t w = 0; w < h.target.vertex_count(); ++w) {
    const Vertex slot = p.leg_h.vertex_map[w];
    const Vertex value = pp.leg_h.vertex_map[hp.vertex_map[w]];
    if (map[slot] != kUnset && map[slot] != value)
      throw ConstructionInconsistent(
          "mediating actions disagree on an identified vertex");
    map[slot] = value;
  }
  return {p.apex, pp.apex, std::move(map)};
}

// The spined category HGrph_m: hypergraphs with injective
// containment-respecting vertex maps, pair-skeleton-plus-full-set
// spine, gluing along shared spine images as proxy pushouts.
class HypergraphCategory {
public:
  using Object = Hypergraph;
  using Morphism = HypergraphMorphism;

  Morphism identity(const Object& x) const { return identity_morphism(x); }

  Morphism compose(const Morphism& outer, const Morphism& inner) const {
    return spined::compose(outer, inner);
  }

  bool is_valid_morphism(const Morphism& m) const { return is_monomorphism(m); }

  Object source(const Morphism& m) const { return m.source; }
  Object target(const Morphism& m) const { return m.target; }

  Object spine(std::size_t n) const { return hyper_spine(n); }

  std::size_t spine_index(const Object& x) const {
    return spined::spine_index(x);
  }

  ProxyPushout<Object, Morphism> proxy_pushout(const Morphism& g,
                                               const Morphism& h) const {
    return hyper_clique_sum(g, h);
  }

  Morphism mediating(const Morphism& g, const Morphism& h, const Morphism& gp,
                     const Morphism& hp) const {
    return hyper_mediating(g, h, gp, hp);
  }

  std::vector<Morphism> enumerate_morphisms(const Object& x, const Object& y,
                                            std::size_t limit) const {
    const auto lim = limit == kNoLimit
                         ? std::nullopt
                         : std::optional<std::size_t>(limit);
    return enumerate_monomorphisms(x, y, lim).morphisms;
  }

  bool exists_morphism(const Object& x, const Object& y) const {
    return exists_monomorphism(x, y);
  }

  std::string describe(const Object& x) const {
    return describe_hypergraph(x);
  }
};

}  // namespace spined
