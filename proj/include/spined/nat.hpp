#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "spined/category.hpp"
#include "spined/errors.hpp"

namespace spined {

// An arrow a -> b of the poset of naturals; exists iff a <= b.
struct NatArrow {
  std::size_t from = 0;
  std::size_t to = 0;

  bool operator==(const NatArrow&) const = default;
};

// Supremum as the proxy pushout of a span n <= a, n <= b.
inline std::size_t nat_proxy_pushout(std::size_t n, std::size_t a,
                                     std::size_t b) {
  if (n > a || n > b)
    throw PreconditionViolation("span feet must dominate the spine value " +
                                std::to_string(n));
  return std::max(a, b);
}

// Naturals under <=, with spine(n) = n and suprema as proxy pushouts.
// Posetal: at most one morphism between any two objects.
class NatCategory {
public:
  using Object = std::size_t;
  using Morphism = NatArrow;

  Morphism identity(const Object& a) const { return {a, a}; }

  Morphism compose(const Morphism& outer, const Morphism& inner) const {
    if (inner.to != outer.from)
      throw PreconditionViolation("composition mismatch in Nat");
    return {inner.from, outer.to};
  }

  bool is_valid_morphism(const Morphism& m) const { return m.from <= m.to; }

  Object source(const Morphism& m) const { return m.from; }
  Object target(const Morphism& m) const { return m.to; }

  Object spine(std::size_t n) const { return n; }
  std::size_t spine_index(const Object& a) const { return a; }

  ProxyPushout<Object, Morphism> proxy_pushout(const Morphism& g,
                                               const Morphism& h) const {
    if (g.from != h.from)
      throw PreconditionViolation("span feet must share their spine source");
    if (!is_valid_morphism(g) || !is_valid_morphism(h))
      throw PreconditionViolation("span legs must be valid Nat arrows");
    const Object apex = nat_proxy_pushout(g.from, g.to, h.to);
    return {apex, {g.to, apex}, {h.to, apex}};
  }

  Morphism mediating(const Morphism& g, const Morphism& h, const Morphism& gp,
                     const Morphism& hp) const {
    const auto p = proxy_pushout(g, h);
    const auto pp = proxy_pushout(compose(gp, g), compose(hp, h));
    return {p.apex, pp.apex};
  }

  std::vector<Morphism> enumerate_morphisms(const Object& a, const Object& b,
                                            std::size_t /*limit*/) const {
    if (a <= b) return {Morphism{a, b}};
    return {};
  }

  bool exists_morphism(const Object& a, const Object& b) const { return a <= b; }

  std::string describe(const Object& a) const { return std::to_string(a); }
};

inline SFunctor<std::size_t> nat_identity_sfunctor() {
  return {"id", [](const std::size_t& a) { return a; }};
}

// Candidate stream for the generic triangulation search on Nat: every
// object is pseudo-chordal, so budget level k contributes k itself.
struct NatCandidates {
  void for_each(const std::size_t& /*object*/, std::size_t k,
                const std::function<bool(const std::size_t&)>& visit) const {
    visit(k);
  }
};

}  // namespace spined
