#include "lamred/oracle.hpp"

#include <unordered_set>

#include "lamred/rng.hpp"
#include "lamred/rules.hpp"

namespace lamred {
namespace oracle {

namespace {

SubstMap lift(const SubstMap& map, TermArena& arena) {
  SubstMap up;
  up.shift = map.shift;
  up.prefix.reserve(map.prefix.size() + 1);
  up.prefix.push_back(arena.bound(1));
  SubstMap shift_one{{}, 1};
  for (TermNode* s : map.prefix)
    up.prefix.push_back(simul_subst(s, shift_one, arena));
  return up;
}

}  // namespace

TermNode* simul_subst(TermNode* t, const SubstMap& map, TermArena& arena) {
  switch (t->kind) {
    case Kind::Const:
    case Kind::FreeVar:
      return t;
    case Kind::BoundIdx: {
      const int i = t->index;
      if (i <= static_cast<int>(map.prefix.size()))
        return map.prefix[static_cast<std::size_t>(i) - 1];
      const int j = i + map.shift;
      if (j < 1)
        throw IllFormedError("substitution produced a non-positive index");
      return j == i ? t : arena.bound(j);
    }
    case Kind::App:
      return arena.app(simul_subst(t->left, map, arena),
                       simul_subst(t->right, map, arena));
    case Kind::Lam:
      return arena.lam(simul_subst(t->left, lift(map, arena), arena));
    case Kind::Susp:
    case Kind::Indirection:
      break;
  }
  throw IllFormedError("simul_subst expects a pure de Bruijn term");
}

TermNode* beta_contract_db(TermNode* t, TermArena& arena) {
  if (t->kind != Kind::App || t->left->kind != Kind::Lam)
    throw IllFormedError("beta_contract_db expects a redex (lam t1) t2");
  SubstMap map{{t->right}, -1};
  return simul_subst(t->left->left, map, arena);
}

bool is_hnf_naive(const TermNode* t) {
  while (t->kind == Kind::Lam) t = t->left;
  while (t->kind == Kind::App) t = t->left;
  return t->kind == Kind::Const || t->kind == Kind::FreeVar ||
         t->kind == Kind::BoundIdx;
}

std::optional<TermNode*> head_step_naive(TermNode* t, TermArena& arena) {
  // Iterative: the head redex can sit arbitrarily deep along the spine.
  std::vector<TermNode*> path;
  TermNode* cur = t;
  for (;;) {
    if (cur->kind == Kind::Lam) {
      path.push_back(cur);
      cur = cur->left;
      continue;
    }
    if (cur->kind == Kind::App) {
      if (cur->left->kind == Kind::Lam) break;
      path.push_back(cur);
      cur = cur->left;
      continue;
    }
    return std::nullopt;  // rigid head, no redex on the spine
  }
  TermNode* result = beta_contract_db(cur, arena);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if ((*it)->kind == Kind::Lam)
      result = arena.lam(result);
    else
      result = arena.app(result, (*it)->right);
  }
  return result;
}

namespace {

constexpr int kMaxNormalizeDepth = 30000;

TermNode* head_normalize_counted(TermNode* t, long long fuel, long long& used,
                                 TermArena& arena) {
  for (;;) {
    auto r = head_step_naive(t, arena);
    if (!r) return t;
    if (used >= fuel) throw NonTerminatingError(used);
    ++used;
    t = *r;
  }
}

TermNode* normalize_counted(TermNode* t, long long fuel, long long& used,
                            TermArena& arena, int depth) {
  if (depth > kMaxNormalizeDepth)
    throw ResourceLimitError("normalization depth limit exceeded");
  t = head_normalize_counted(t, fuel, used, arena);
  // t is lam^n (h a1 ... am); rebuild with normalized arguments.
  int binders = 0;
  TermNode* spine = t;
  while (spine->kind == Kind::Lam) {
    ++binders;
    spine = spine->left;
  }
  std::vector<TermNode*> args;
  while (spine->kind == Kind::App) {
    args.push_back(spine->right);
    spine = spine->left;
  }
  TermNode* result = spine;  // the rigid head
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    result =
        arena.app(result, normalize_counted(*it, fuel, used, arena, depth + 1));
  for (int i = 0; i < binders; ++i) result = arena.lam(result);
  return result;
}

}  // namespace

TermNode* head_normalize_naive(TermNode* t, long long fuel, TermArena& arena) {
  long long used = 0;
  return head_normalize_counted(t, fuel, used, arena);
}

TermNode* normalize_naive(TermNode* t, long long fuel, TermArena& arena) {
  long long used = 0;
  return normalize_counted(t, fuel, used, arena, 0);
}

namespace {

thread_local long long g_last_randomized_steps = 0;

// Distinct nodes at which a reading rule fires: suspensions whose skeleton is
// not itself a suspension. Environments are part of the term structure, so
// binding payloads count as positions too.
void collect_positions(TermNode* t, std::unordered_set<const TermNode*>& seen,
                       std::vector<TermNode*>& out) {
  TermNode* d = deref(t);
  if (!seen.insert(d).second) return;
  switch (d->kind) {
    case Kind::App:
      collect_positions(d->left, seen, out);
      collect_positions(d->right, seen, out);
      return;
    case Kind::Lam:
      collect_positions(d->left, seen, out);
      return;
    case Kind::Susp: {
      if (deref(d->left)->kind != Kind::Susp) out.push_back(d);
      collect_positions(d->left, seen, out);
      for (Env e = d->env; e != nullptr; e = e->next)
        if (!is_dummy(*e)) collect_positions(e->bound, seen, out);
      return;
    }
    default:
      return;
  }
}

}  // namespace

TermNode* randomized_read_out(TermNode* t, std::uint64_t seed,
                              TermArena& arena) {
  TermArena scratch;
  scratch.set_node_budget(arena.node_budget());
  TermNode* work = copy_term(t, scratch);
  SplitMix64 rng(seed);
  long long steps = 0;
  for (;;) {
    std::vector<TermNode*> positions;
    std::unordered_set<const TermNode*> seen;
    collect_positions(work, seen, positions);
    if (positions.empty()) break;
    TermNode* pick = positions[rng.below(positions.size())];
    auto step = reading_step(pick, scratch);
    if (!step) throw Error("randomized_read_out: stale position");
    assign(pick, step->result);
    ++steps;
  }
  g_last_randomized_steps = steps;
  return copy_term(work, arena);
}

long long last_randomized_step_count() { return g_last_randomized_steps; }

}  // namespace oracle
}  // namespace lamred
