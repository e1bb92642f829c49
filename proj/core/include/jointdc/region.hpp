#pragma once

#include <cstdint>
#include <vector>

#include "jointdc/pmf.hpp"
#include "jointdc/rule.hpp"
#include "jointdc/type_composition.hpp"

namespace jointdc {

// A finite scored space for the generic region builder: per element the three
// scores f, g, h.
struct ScoredSpace {
    struct Element {
        std::uint64_t id;
        double f, g, h;
    };
    std::vector<Element> elements;
};

// { x : f(x) + a*g(x) <= b*h(x) }, ties included. a, b >= 0.
std::vector<std::uint64_t> lemma1_region(const ScoredSpace& space, double a,
                                         double b);

// Membership of a type in one of the rules that require both sources:
// Star, Hat, StarUniv, Excess. p1 must have full support. Throws on other
// kinds.
bool membership_known(const TypeComposition& t, const Pmf& p0, const Pmf& p1,
                      const RuleSpec& rule);

// Membership for the universal rules UKnownP0, UCost (need p0), UBlind, and
// UTraining (needs both training types, length rule.m). Throws when a
// required input is missing or the kind is wrong.
bool membership_universal(const TypeComposition& t, const RuleSpec& rule,
                          const Pmf* p0 = nullptr,
                          const TypeComposition* t0 = nullptr,
                          const TypeComposition* t1 = nullptr);

// Dispatch on rule.kind using whatever the context carries.
bool rule_accepts(const TypeComposition& t, const RuleSpec& rule,
                  const RuleContext& ctx);

// A decision region materialized at type granularity for a fixed n.
struct Region {
    int n = 0;
    std::size_t alphabet_size = 0;
    std::vector<TypeComposition> accepted;
    RuleSpec rule;
};

inline constexpr double kDefaultTypeCap = 2e6;

// Enumerates all types of length n and keeps those the rule accepts.
// Throws when the number of types exceeds `cap` (the message names the
// count).
Region materialize_region(const RuleSpec& rule, const RuleContext& ctx, int n,
                          std::size_t alphabet_size,
                          double cap = kDefaultTypeCap);

}  // namespace jointdc
