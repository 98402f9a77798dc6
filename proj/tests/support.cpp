#include "support.hpp"

#include <unordered_set>

namespace lamred::testsupport {

Env make_env(TermArena& a, std::initializer_list<Ent> items) {
  std::vector<Ent> v(items);
  Env e = nullptr;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->t == nullptr)
      e = a.dummy(it->l, e);
    else
      e = a.bind(it->t, it->l, e);
  }
  return e;
}

TermNode* gen_closed_db(SplitMix64& rng, TermArena& a, int depth, int level) {
  static const char* consts[4] = {"a", "b", "c", "d"};
  if (depth == 0 || rng.below(100) < 35) {
    if (level > 0 && rng.below(100) < 70)
      return a.bound(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(level))));
    if (rng.below(100) < 12) return a.free_var("F");
    return a.constant(consts[rng.below(4)]);
  }
  if (rng.below(100) < 45)
    return a.lam(gen_closed_db(rng, a, depth - 1, level + 1));
  return a.app(gen_closed_db(rng, a, depth - 1, level),
               gen_closed_db(rng, a, depth - 1, level));
}

TermNode* gen_wf_susp(SplitMix64& rng, TermArena& a, int depth) {
  static const char* consts[3] = {"a", "b", "c"};
  if (depth == 0) {
    if (rng.below(100) < 50)
      return a.bound(1 + static_cast<int>(rng.below(4)));
    return a.constant(consts[rng.below(3)]);
  }
  switch (rng.below(5)) {
    case 0:
      return a.lam(gen_wf_susp(rng, a, depth - 1));
    case 1:
      return a.app(gen_wf_susp(rng, a, depth - 1),
                   gen_wf_susp(rng, a, depth - 1));
    case 2: {  // suspension
      int ol = static_cast<int>(rng.below(4));
      int nl = static_cast<int>(rng.below(4));
      Env env = nullptr;
      for (int i = 0; i < ol; ++i) {
        bool dummy = nl > 0 && rng.below(2) == 0;
        if (dummy) {
          env = a.dummy(static_cast<int>(rng.below(static_cast<std::uint64_t>(nl))), env);
        } else {
          int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(nl) + 1));
          env = a.bind(gen_wf_susp(rng, a, depth - 1), l, env);
        }
      }
      return a.susp(gen_wf_susp(rng, a, depth - 1), ol, nl, env);
    }
    case 3:
      return a.bound(1 + static_cast<int>(rng.below(4)));
    default:
      return a.constant(consts[rng.below(3)]);
  }
}

namespace {

NamedPtr gen_named(SplitMix64& rng, int depth,
                   std::vector<std::string>& scope) {
  static const char* consts[3] = {"f", "g", "h"};
  if (depth == 0 || rng.below(100) < 35) {
    if (!scope.empty() && rng.below(100) < 70)
      return named_absvar(scope[rng.below(scope.size())]);
    return named_const(consts[rng.below(3)]);
  }
  if (rng.below(100) < 45) {
    std::string binder = "x" + std::to_string(scope.size());
    scope.push_back(binder);
    NamedPtr body = gen_named(rng, depth - 1, scope);
    scope.pop_back();
    return named_abs(binder, body);
  }
  return named_app(gen_named(rng, depth - 1, scope),
                   gen_named(rng, depth - 1, scope));
}

}  // namespace

NamedPtr gen_named_with_head_redex(SplitMix64& rng, int depth) {
  std::vector<std::string> scope;
  int prefix = static_cast<int>(rng.below(3));
  std::vector<std::string> binders;
  for (int i = 0; i < prefix; ++i) {
    std::string b = "y" + std::to_string(i);
    binders.push_back(b);
    scope.push_back(b);
  }
  std::string redex_binder = "z";
  scope.push_back(redex_binder);
  NamedPtr body = gen_named(rng, depth, scope);
  scope.pop_back();
  NamedPtr arg = gen_named(rng, depth, scope);
  NamedPtr t = named_app(named_abs(redex_binder, body), arg);
  int extra = static_cast<int>(rng.below(3));
  for (int i = 0; i < extra; ++i)
    t = named_app(t, gen_named(rng, depth - 1 < 0 ? 0 : depth - 1, scope));
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    t = named_abs(*it, t);
  return t;
}

NamedPtr contract_head_named(const NamedPtr& t) {
  switch (t->tag) {
    case NamedTerm::Tag::Abs:
      return named_abs(t->name, contract_head_named(t->fun));
    case NamedTerm::Tag::App: {
      if (t->fun->tag == NamedTerm::Tag::Abs)
        return subst_named(t->fun->fun, t->fun->name, t->arg);
      return named_app(contract_head_named(t->fun), t->arg);
    }
    default:
      throw Error("contract_head_named: no head redex");
  }
}

namespace {

void count_nodes(const TermNode* t, std::unordered_set<const TermNode*>& seen) {
  const TermNode* d = deref(t);
  if (!seen.insert(d).second) return;
  switch (d->kind) {
    case Kind::App:
      count_nodes(d->left, seen);
      count_nodes(d->right, seen);
      return;
    case Kind::Lam:
      count_nodes(d->left, seen);
      return;
    case Kind::Susp:
      count_nodes(d->left, seen);
      for (Env e = d->env; e != nullptr; e = e->next)
        if (!is_dummy(*e)) count_nodes(e->bound, seen);
      return;
    default:
      return;
  }
}

}  // namespace

std::size_t term_size(const TermNode* t) {
  std::unordered_set<const TermNode*> seen;
  count_nodes(t, seen);
  return seen.size();
}

}  // namespace lamred::testsupport
