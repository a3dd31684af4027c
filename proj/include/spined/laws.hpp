#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spined/category.hpp"
#include "spined/errors.hpp"

namespace spined {

struct LawFailure {
  std::string case_label;
  std::string detail;

  bool operator==(const LawFailure&) const = default;
};

// Outcome of running one law over a population; failures are report
// entries, never aborts. enumeration_bound records the morphism-search
// truncation in force, since uniqueness-style laws are only verified
// up to it.
struct LawReport {
  std::string law;
  std::size_t population_size = 0;
  std::vector<LawFailure> failures;
  std::size_t enumeration_bound = 0;

  bool passed() const { return failures.empty(); }
};

// SC1: every object admits a morphism into the spine object named by
// its constructive witness spine_index.
template <SpinedCategory C>
LawReport check_sc1(const C& cat,
                    const std::vector<typename C::Object>& population) {
  LawReport report{"SC1", population.size(), {}, 1};
  for (const auto& x : population) {
    const std::size_t n = cat.spine_index(x);
    const auto target = cat.spine(n);
    const auto witnesses = cat.enumerate_morphisms(x, target, 1);
    if (witnesses.empty()) {
      report.failures.push_back(
          {cat.describe(x),
           "no morphism into spine(" + std::to_string(n) + ")"});
      continue;
    }
    if (!cat.is_valid_morphism(witnesses.front()))
      report.failures.push_back(
          {cat.describe(x),
           "witness into spine(" + std::to_string(n) + ") is invalid"});
  }
  return report;
}

template <typename Morphism>
struct Sc2Diagram {
  Morphism g;   // spine object -> G
  Morphism h;   // spine object -> H
  Morphism gp;  // G -> G'
  Morphism hp;  // H -> H'
};

// SC2 on one diagram: the mediating morphism
// P(g,h) -> P(g'∘g, h'∘h) exists, both squares commute, and no other
// morphism between the apexes commutes (verified by exhaustive
// enumeration up to the bound).
template <SpinedCategory C>
LawReport check_sc2(const C& cat,
                    const Sc2Diagram<typename C::Morphism>& diagram,
                    std::size_t enumeration_bound = 100000,
                    const std::string& case_label = "diagram") {
  LawReport report{"SC2", 1, {}, enumeration_bound};
  const auto& [g, h, gp, hp] = diagram;

  const auto p = cat.proxy_pushout(g, h);
  const auto pp = cat.proxy_pushout(cat.compose(gp, g), cat.compose(hp, h));
  if (!(cat.compose(p.leg_g, g) == cat.compose(p.leg_h, h)))
    report.failures.push_back({case_label, "base cocone does not commute"});
  if (!(cat.compose(pp.leg_g, cat.compose(gp, g)) ==
        cat.compose(pp.leg_h, cat.compose(hp, h))))
    report.failures.push_back({case_label, "extended cocone does not commute"});

  typename C::Morphism mediating = cat.identity(p.apex);
  try {
    mediating = cat.mediating(g, h, gp, hp);
  } catch (const Error& e) {
    report.failures.push_back(
        {case_label, std::string("mediating not found: ") + e.what()});
    return report;
  }

  const auto left_g = cat.compose(pp.leg_g, gp);
  const auto left_h = cat.compose(pp.leg_h, hp);
  if (!cat.is_valid_morphism(mediating))
    report.failures.push_back({case_label, "mediating morphism is invalid"});
  else if (!(cat.compose(mediating, p.leg_g) == left_g &&
             cat.compose(mediating, p.leg_h) == left_h))
    report.failures.push_back({case_label, "mediating does not commute"});

  bool found_self = false;
  for (const auto& candidate :
       cat.enumerate_morphisms(p.apex, pp.apex, enumeration_bound)) {
    if (!(cat.compose(candidate, p.leg_g) == left_g &&
          cat.compose(candidate, p.leg_h) == left_h))
      continue;
    if (candidate == mediating) {
      found_self = true;
    } else {
      report.failures.push_back(
          {case_label, "uniqueness violation: a second commuting morphism "
                       "between the apexes exists"});
    }
  }
  if (!found_self)
    report.failures.push_back(
        {case_label, "mediating not found among enumerated morphisms"});
  return report;
}

template <SpinedCategory C>
LawReport check_sc2_suite(
    const C& cat,
    const std::vector<Sc2Diagram<typename C::Morphism>>& diagrams,
    std::size_t enumeration_bound = 100000) {
  LawReport report{"SC2", diagrams.size(), {}, enumeration_bound};
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const LawReport one =
        check_sc2(cat, diagrams[i], enumeration_bound,
                  "diagram " + std::to_string(i));
    report.failures.insert(report.failures.end(), one.failures.begin(),
                           one.failures.end());
  }
  return report;
}

// S-functor laws: SF1 (spine preservation) for n up to the bound, SF2
// (proxy-pushout preservation) on each supplied diagram, and
// monotonicity along every discovered morphism between population
// members. Object values are cached, so the cost is dominated by the
// pairwise morphism-existence searches.
template <SpinedCategory C>
LawReport check_sfunctor_laws(
    const C& cat, const SFunctor<typename C::Object>& f,
    const std::vector<typename C::Object>& population,
    const std::vector<Sc2Diagram<typename C::Morphism>>& pushout_diagrams,
    std::size_t sf1_bound = 6) {
  LawReport report{"S-functor[" + f.name + "]", population.size(), {},
                   sf1_bound};

  for (std::size_t n = 0; n <= sf1_bound; ++n) {
    const std::size_t got = f.value(cat.spine(n));
    if (got != n)
      report.failures.push_back(
          {"SF1 n=" + std::to_string(n),
           "value(spine) = " + std::to_string(got) +
               ", expected " + std::to_string(n)});
  }

  for (std::size_t i = 0; i < pushout_diagrams.size(); ++i) {
    const auto& d = pushout_diagrams[i];
    const auto p = cat.proxy_pushout(d.g, d.h);
    const std::size_t apex = f.value(p.apex);
    const std::size_t expected = std::max(f.value(cat.target(d.g)),
                                          f.value(cat.target(d.h)));
    if (apex != expected)
      report.failures.push_back(
          {"SF2 diagram " + std::to_string(i),
           "value(apex) = " + std::to_string(apex) +
               ", expected max of parts = " + std::to_string(expected)});
  }

  std::vector<std::size_t> values;
  values.reserve(population.size());
  for (const auto& x : population) values.push_back(f.value(x));
  for (std::size_t i = 0; i < population.size(); ++i) {
    for (std::size_t j = 0; j < population.size(); ++j) {
      if (i == j) continue;
      if (values[i] <= values[j]) continue;  // nothing to refute
      if (cat.exists_morphism(population[i], population[j]))
        report.failures.push_back(
            {"monotone " + cat.describe(population[i]) + " -> " +
                 cat.describe(population[j]),
             std::to_string(values[i]) + " > " + std::to_string(values[j])});
    }
  }
  return report;
}

}  // namespace spined
