#ifndef LAMRED_STRATEGIES_HPP
#define LAMRED_STRATEGIES_HPP

#include <deque>
#include <optional>
#include <string_view>

#include "lamred/oracle.hpp"
#include "lamred/term.hpp"

namespace lamred {

// The implicit strategy's public contract excludes suspension nodes; feeding
// it one raises this instead of silently reading it out, which would skew the
// metering comparison.
struct UnsupportedInputError : Error {
  using Error::Error;
};

enum class Strategy : std::uint8_t { Implicit, Explicit, Combined };
enum class Form : std::uint8_t { Hnf, Whnf };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

constexpr long long kDefaultFuel = 100000;

// Environment entries of the implicit strategy: term-with-environment
// closures that live only in recursion state and are never committed to the
// term graph (and are therefore not metered).
struct ClosureEnvNode;

struct Closure {
  TermNode* term;
  int ol;
  int nl;
  const ClosureEnvNode* env;
};

struct ClosureEnvNode {
  bool dummy;
  int level;
  Closure clos;  // valid when !dummy
  const ClosureEnvNode* next;
};

class ClosurePool {
 public:
  const ClosureEnvNode* push_dummy(int level, const ClosureEnvNode* next) {
    items_.push_back(ClosureEnvNode{true, level, {}, next});
    return &items_.back();
  }
  const ClosureEnvNode* push_binding(Closure c, int level,
                                     const ClosureEnvNode* next) {
    items_.push_back(ClosureEnvNode{false, level, c, next});
    return &items_.back();
  }

 private:
  std::deque<ClosureEnvNode> items_;
};

// Calculates the suspension [t, ol, nl, env] out into a fresh pure de Bruijn
// term; the input is not mutated and no suspension nodes appear in the
// output.
TermNode* subst_implicit(TermNode* t, int ol, int nl, const ClosureEnvNode* env,
                         ClosurePool& pool, TermArena& arena);

// The three head-normalization procedures. Each updates t in place so that
// it dereferences to a (weak) head normal form of its original value; fuel
// bounds the number of beta contractions and NonTerminatingError is raised
// when it runs out. head_norm_implicit additionally requires a suspension-free
// input; the other two accept any well-formed suspension term and may leave
// arguments as explicit suspensions (a generalized head normal form).
void head_norm_implicit(TermNode* t, Form form, long long fuel,
                        TermArena& arena);
void head_norm_explicit(TermNode* t, Form form, long long fuel,
                        TermArena& arena);
void head_norm_combined(TermNode* t, Form form, long long fuel,
                        TermArena& arena);

void head_norm(TermNode* t, Strategy s, Form form, long long fuel,
               TermArena& arena);

// Destructively exposes the top-level non-suspension structure of deref(t):
// reading rules applied at the root, with bound-variable lookups chained
// until something structural is reached. No-op when deref(t) is not a
// suspension.
void lazy_read(TermNode* t, TermArena& arena);

// Head-normalize, then normalize every argument, until the term dereferences
// to the pure beta-normal form. Fuel is shared across the whole run.
void normalize_full(TermNode* t, Strategy s, long long fuel, TermArena& arena);

// deref(t) matches lam^n (h a1 ... am) with h a constant, instantiatable
// variable or bound index; arguments may still be suspensions.
bool is_generalized_hnf(const TermNode* t);

}  // namespace lamred

#endif
