#ifndef LAMRED_ORACLE_HPP
#define LAMRED_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lamred/term.hpp"

namespace lamred {

struct NonTerminatingError : Error {
  explicit NonTerminatingError(long long steps_taken)
      : Error("no normal form within " + std::to_string(steps_taken) +
              " beta steps"),
        steps(steps_taken) {}
  long long steps;
};

namespace oracle {

// Finite encoding of the infinite substitution sequence
// s1, ..., sk, #(k+1+shift), #(k+2+shift), ...; closed under the lifting
// performed when a substitution is pushed under an abstraction.
struct SubstMap {
  std::vector<TermNode*> prefix;
  int shift = 0;
};

// Textbook simultaneous substitution on pure de Bruijn terms. Output is
// freshly built except that substituted-in prefix terms are shared. A
// resulting index <= 0 signals an ill-scoped input and is a hard failure.
TermNode* simul_subst(TermNode* t, const SubstMap& map, TermArena& arena);

// Contracts the pure redex (lam t1) t2 to S(t1; t2, #1, #2, ...).
TermNode* beta_contract_db(TermNode* t, TermArena& arena);

// Contracts the head redex of a pure term once; absent when t is already in
// head normal form.
std::optional<TermNode*> head_step_naive(TermNode* t, TermArena& arena);

bool is_hnf_naive(const TermNode* t);

// Repeated head contraction until head normal form; NonTerminatingError
// (carrying the steps taken) when fuel runs out first.
TermNode* head_normalize_naive(TermNode* t, long long fuel, TermArena& arena);

// Leftmost-outermost reduction to beta-normal form under the same fuel.
TermNode* normalize_naive(TermNode* t, long long fuel, TermArena& arena);

// Applies reading rules at uniformly random applicable positions until none
// remain; the confluence check against rules::read_out. Works on a private
// copy, never on t itself.
TermNode* randomized_read_out(TermNode* t, std::uint64_t seed,
                              TermArena& arena);

// Reading steps spent by the last randomized_read_out call on this thread;
// exposed for the termination-budget property test.
long long last_randomized_step_count();

}  // namespace oracle

}  // namespace lamred

#endif
