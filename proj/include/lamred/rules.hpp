#ifndef LAMRED_RULES_HPP
#define LAMRED_RULES_HPP

#include <optional>
#include <utility>

#include "lamred/term.hpp"

namespace lamred {

// Rules r5, r8 and r9 are subsumed by the enhanced bound-variable rules
// r10-r12 and never reported.
enum class RuleId : std::uint8_t {
  BetaS,
  BetaSPrime,
  R1,
  R2,
  R3,
  R4,
  R6,
  R7,
  R10,
  R11,
  R12,
};

const char* rule_name(RuleId r);

struct RuleStep {
  RuleId rule;
  TermNode* result;
};

// Applies the unique reading rule that matches at the root of the suspension
// deref(t) and returns a freshly built result; the input is never mutated.
// Absent only when the skeleton is itself a suspension (nested case). Rule
// selection: r1 constants, r2 instantiatable variables, r3/r4/r10/r11/r12
// bound indices by their side conditions, r6 applications, r7 abstractions.
std::optional<RuleStep> reading_step(TermNode* t, TermArena& arena);

// Contracts the redex at the root of deref(t): (BetaSPrime) when the function
// is an abstraction whose body is the dummy-headed suspension the rule schema
// demands, (BetaS) for every other abstraction; absent when deref(t) is not a
// redex. Freshly built, non-destructive.
std::optional<RuleStep> beta_step(TermNode* t, TermArena& arena);

// Calculates every suspended substitution out (leftmost-outermost, inner
// suspensions first) and returns the pure de Bruijn term underlying t as a
// fresh tree in `arena`. Never contracts beta-redices.
TermNode* read_out(TermNode* t, TermArena& arena);

}  // namespace lamred

#endif
