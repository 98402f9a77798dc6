#ifndef LAMRED_TERM_HPP
#define LAMRED_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamred/meter.hpp"

namespace lamred {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A well-formedness invariant was violated by the caller (bad environment
// index, suspension with a short environment, ...).
struct IllFormedError : Error {
  using Error::Error;
};

// The per-run node budget was exhausted; reported like non-termination.
struct ResourceLimitError : Error {
  using Error::Error;
};

enum class Kind : std::uint8_t {
  Const,
  FreeVar,
  BoundIdx,
  App,
  Lam,
  Susp,
  Indirection,
};

const char* kind_name(Kind k);

struct TermNode;
struct EnvNode;

// Environments are persistent lists with shared tails; nullptr is nil and
// index 1 is the head.
using Env = const EnvNode*;

struct EnvNode {
  TermNode* bound;  // nullptr marks a dummy entry @l
  int level;
  Env next;
};

inline bool is_dummy(const EnvNode& e) { return e.bound == nullptr; }

// One mutable node of the shared term graph. Field roles depend on `kind`:
//   Const, FreeVar   name
//   BoundIdx         index (>= 1)
//   App              left = function, right = argument
//   Lam              left = body
//   Susp             left = skeleton, ol, nl, env
//   Indirection      left = target
// Graphs reachable from any node are assumed acyclic throughout.
struct TermNode {
  Kind kind;
  int index = 0;
  int ol = 0;
  int nl = 0;
  TermNode* left = nullptr;
  TermNode* right = nullptr;
  Env env = nullptr;
  std::string name;
};

// Owns every node of one term graph and meters each construction. One arena
// per engine/benchmark run; nodes die with the arena.
class TermArena {
 public:
  static constexpr std::size_t kDefaultNodeBudget = 4u * 1000u * 1000u;

  TermArena() = default;
  TermArena(const TermArena&) = delete;
  TermArena& operator=(const TermArena&) = delete;

  TermNode* constant(std::string name);
  TermNode* free_var(std::string name);
  TermNode* bound(int index);
  TermNode* app(TermNode* fun, TermNode* arg);
  TermNode* lam(TermNode* body);
  TermNode* susp(TermNode* skeleton, int ol, int nl, Env env);
  TermNode* indirection(TermNode* target);

  Env bind(TermNode* bound, int level, Env next);
  Env dummy(int level, Env next);

  Meter& meter() { return meter_; }
  const Meter& meter() const { return meter_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t env_node_count() const { return env_nodes_.size(); }

  void set_node_budget(std::size_t budget) { node_budget_ = budget; }
  std::size_t node_budget() const { return node_budget_; }

 private:
  TermNode* fresh(Kind k);
  void check_budget();

  std::deque<TermNode> nodes_;
  std::deque<EnvNode> env_nodes_;
  Meter meter_;
  std::size_t node_budget_ = kDefaultNodeBudget;
};

// Follows indirection links to the first node that is not an indirection.
// Read-only; chains are not compressed here.
TermNode* deref(TermNode* t);
const TermNode* deref(const TermNode* t);

// Turns dst into an indirection onto deref(src). In-place update, nothing is
// allocated. dst must not be reachable from deref(src).
void assign(TermNode* dst, TermNode* src);

// In-place kind rewrites used by the destructive reduction procedures; none
// of these allocate.
void become_bound(TermNode* t, int index);
void become_app(TermNode* t, TermNode* fun, TermNode* arg);
void become_lam(TermNode* t, TermNode* body);
void become_susp(TermNode* t, TermNode* skeleton, int ol, int nl, Env env);
void become_copy_of(TermNode* t, const TermNode* src);

std::size_t env_length(Env e);

// 1-based lookup; throws IllFormedError when i is out of range, since every
// in-range access is guaranteed by suspension well-formedness upstream.
const EnvNode& env_nth(Env e, int i);

struct Violation {
  const TermNode* node;
  std::string constraint;
};

// Empty result iff every suspension under t satisfies length(env) = ol, every
// binding level is <= nl, every dummy level is < nl, and every bound index is
// >= 1.
std::vector<Violation> check_well_formed(const TermNode* t);

// Structural equality modulo indirections (suspensions compare componentwise).
bool equal_structure(const TermNode* a, const TermNode* b);

// True when no Susp and no Indirection node is reachable from t.
bool is_pure_debruijn(const TermNode* t);

// True when some reachable node (through indirections) is a Susp.
bool contains_susp(const TermNode* t);

// Deep-copies the graph reachable from t into dst as a tree (sharing is not
// preserved); used to replay corpus terms into fresh engines.
TermNode* copy_term(const TermNode* t, TermArena& dst);

}  // namespace lamred

#endif
