#ifndef LAMRED_TESTS_SUPPORT_HPP
#define LAMRED_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lamred/names.hpp"
#include "lamred/rng.hpp"
#include "lamred/term.hpp"

namespace lamred::testsupport {

// Environment entry shorthand: {nullptr, l} is a dummy, {t, l} a binding.
struct Ent {
  TermNode* t;
  int l;
};

Env make_env(TermArena& a, std::initializer_list<Ent> items);

// Seeded random closed de Bruijn term with bounded depth.
TermNode* gen_closed_db(SplitMix64& rng, TermArena& a, int depth, int level);

// Seeded random well-formed suspension-notation term (may nest suspensions in
// skeletons and environment bindings).
TermNode* gen_wf_susp(SplitMix64& rng, TermArena& a, int depth);

// Seeded random closed named term guaranteed to contain a head redex.
NamedPtr gen_named_with_head_redex(SplitMix64& rng, int depth);

// Single head contraction in the name-carrying scheme (test-side analogue of
// the de Bruijn head step).
NamedPtr contract_head_named(const NamedPtr& t);

// Total number of nodes reachable through indirections, counting shares once.
std::size_t term_size(const TermNode* t);

}  // namespace lamred::testsupport

#endif
