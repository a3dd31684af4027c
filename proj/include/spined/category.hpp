#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace spined {

// The distinguished cocone assigned to a span out of a spine object:
// apex together with the two legs out of the span's feet.
template <typename Object, typename Morphism>
struct ProxyPushout {
  Object apex;
  Morphism leg_g;  // foot of g -> apex
  Morphism leg_h;  // foot of h -> apex
};

// A natural-number-valued functor, given by its object map. The arrow
// action is the induced <= relation, so only object values are stored;
// the name tags report entries.
template <typename Object>
struct SFunctor {
  std::string name;
  std::function<std::size_t(const Object&)> value;
};

// A spined-category instance: a category presented by concrete finite
// data, equipped with a spine and proxy pushouts.
//
// Conventions shared by every instance:
//   - compose(outer, inner) is "outer after inner" (inner first);
//   - morphisms carry their endpoints and compare pointwise on the
//     underlying data;
//   - enumerate_morphisms(x, y, limit) lists the hom-set in a fixed
//     deterministic order, truncating after `limit` entries;
//   - spine_index(x) returns some n with a morphism x -> spine(n),
//     constructively witnessing SC1.
template <typename C>
concept SpinedCategory = requires(const C& cat, const typename C::Object& x,
                                  const typename C::Morphism& f, std::size_t n) {
  { cat.identity(x) } -> std::same_as<typename C::Morphism>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.is_valid_morphism(f) } -> std::same_as<bool>;
  { cat.source(f) } -> std::same_as<typename C::Object>;
  { cat.target(f) } -> std::same_as<typename C::Object>;
  { cat.spine(n) } -> std::same_as<typename C::Object>;
  { cat.spine_index(x) } -> std::same_as<std::size_t>;
  {
    cat.proxy_pushout(f, f)
  } -> std::same_as<ProxyPushout<typename C::Object, typename C::Morphism>>;
  { cat.mediating(f, f, f, f) } -> std::same_as<typename C::Morphism>;
  {
    cat.enumerate_morphisms(x, x, n)
  } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.exists_morphism(x, x) } -> std::same_as<bool>;
  { cat.describe(x) } -> std::same_as<std::string>;
};

inline constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);

}  // namespace spined
