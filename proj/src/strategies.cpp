#include "lamred/strategies.hpp"

#include <vector>

namespace lamred {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Implicit: return "implicit";
    case Strategy::Explicit: return "explicit";
    case Strategy::Combined: return "combined";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "implicit") return Strategy::Implicit;
  if (name == "explicit") return Strategy::Explicit;
  if (name == "combined") return Strategy::Combined;
  return std::nullopt;
}

namespace {

// Reduction recursion can deepen with every contraction on divergent terms,
// so the resource budget bounds the depth as well as the step count.
constexpr int kMaxReductionDepth = 30000;

struct RunCtx {
  TermArena& arena;
  long long fuel;
  long long betas = 0;
  int depth = 0;

  void beta() {
    if (betas >= fuel) throw NonTerminatingError(betas);
    ++betas;
    arena.meter().beta_steps++;
  }
  void read() { arena.meter().reading_steps++; }
};

struct DepthGuard {
  RunCtx& cx;
  explicit DepthGuard(RunCtx& c) : cx(c) {
    if (++cx.depth > kMaxReductionDepth)
      throw ResourceLimitError("reduction depth limit exceeded");
  }
  ~DepthGuard() { --cx.depth; }
};

const ClosureEnvNode& closure_nth(const ClosureEnvNode* env, int i) {
  if (i < 1) throw IllFormedError("environment index must be >= 1");
  for (; env != nullptr; env = env->next)
    if (--i == 0) return *env;
  throw IllFormedError("environment index out of range");
}

// ---------------------------------------------------------------------------
// Implicit strategy: suspensions live only in the recursion state; inputs and
// outputs are pure de Bruijn graphs.
// ---------------------------------------------------------------------------

struct EbQuad {
  TermNode* term;
  int ol;
  int nl;
  const ClosureEnvNode* env;

  bool trivial() const { return ol == 0 && nl == 0 && env == nullptr; }
};

struct ImplicitCtx {
  RunCtx& run;
  ClosurePool& pool;
};

TermNode* subst_clo(TermNode* t, int ol, int nl, const ClosureEnvNode* env,
                    ImplicitCtx& cx) {
  DepthGuard guard(cx.run);
  TermNode* d = deref(t);
  switch (d->kind) {
    case Kind::App:
      return cx.run.arena.app(subst_clo(d->left, ol, nl, env, cx),
                              subst_clo(d->right, ol, nl, env, cx));
    case Kind::Lam:
      return cx.run.arena.lam(subst_clo(
          d->left, ol + 1, nl + 1, cx.pool.push_dummy(nl, env), cx));
    case Kind::BoundIdx: {
      const int i = d->index;
      if (i > ol) return cx.run.arena.bound(i - ol + nl);
      const ClosureEnvNode& item = closure_nth(env, i);
      if (item.dummy) return cx.run.arena.bound(nl - item.level);
      const Closure& c = item.clos;
      const int shifted = nl + c.nl - item.level;
      if (c.ol == 0 && shifted == 0) return c.term;
      return subst_clo(c.term, c.ol, shifted, c.env, cx);
    }
    case Kind::Const:
    case Kind::FreeVar:
      return d;
    case Kind::Susp:
      throw UnsupportedInputError(
          "implicit strategy met a suspension node in its input");
    case Kind::Indirection:
      break;
  }
  throw Error("subst_clo: unreachable");
}

EbQuad build_lam_eb(TermNode* term, TermNode* body, int ol, int nl,
                    ImplicitCtx& cx) {
  if (ol == 0 && nl == 0) return {term, 0, 0, nullptr};
  return {cx.run.arena.lam(body), 0, 0, nullptr};
}

EbQuad update_app_eb(TermNode* term, EbQuad s, int ol, int nl) {
  if (s.trivial() && ol == 0 && nl == 0) {
    assign(term, s.term);
    return s;
  }
  return s;
}

EbQuad build_app_eb(TermNode* term, TermNode* fun, TermNode* arg, int ol,
                    int nl, const ClosureEnvNode* env, ImplicitCtx& cx) {
  if (ol == 0 && nl == 0 && env == nullptr) {
    assign(term, cx.run.arena.app(fun, arg));
    return {term, 0, 0, nullptr};
  }
  return {cx.run.arena.app(fun, subst_clo(arg, ol, nl, env, cx)), 0, 0,
          nullptr};
}

EbQuad hn_eb(TermNode* term, int ol, int nl, const ClosureEnvNode* env,
             bool whnf, ImplicitCtx& cx) {
  DepthGuard guard(cx.run);
  switch (term->kind) {
    case Kind::Indirection:
      return hn_eb(deref(term), ol, nl, env, whnf, cx);
    case Kind::BoundIdx: {
      if (ol == 0 && nl == 0 && env == nullptr) return {term, 0, 0, nullptr};
      const int i = term->index;
      if (i > ol) return {cx.run.arena.bound(i - ol + nl), 0, 0, nullptr};
      const ClosureEnvNode& item = closure_nth(env, i);
      if (item.dummy)
        return {cx.run.arena.bound(nl - item.level), 0, 0, nullptr};
      const Closure& c = item.clos;
      if (item.level == nl) return hn_eb(c.term, c.ol, c.nl, c.env, whnf, cx);
      return hn_eb(c.term, c.ol, c.nl + nl - item.level, c.env, whnf, cx);
    }
    case Kind::Lam: {
      if (whnf) return {term, ol, nl, env};
      EbQuad q =
          (ol == 0 && nl == 0 && env == nullptr)
              ? hn_eb(term->left, 0, 0, nullptr, false, cx)
              : hn_eb(term->left, ol + 1, nl + 1, cx.pool.push_dummy(nl, env),
                      false, cx);
      return build_lam_eb(term, q.term, ol, nl, cx);
    }
    case Kind::App: {
      EbQuad f = hn_eb(term->left, ol, nl, env, true, cx);
      TermNode* fd = deref(f.term);
      if (fd->kind == Kind::Lam) {
        cx.run.beta();
        const ClosureEnvNode* extended = cx.pool.push_binding(
            Closure{term->right, ol, nl, env}, f.nl, f.env);
        EbQuad s = hn_eb(fd->left, f.ol + 1, f.nl, extended, whnf, cx);
        return update_app_eb(term, s, ol, nl);
      }
      if (!f.trivial())
        throw Error("pre-step quadruple with a rigid head");
      return build_app_eb(term, fd, term->right, ol, nl, env, cx);
    }
    case Kind::Const:
    case Kind::FreeVar:
      return {term, 0, 0, nullptr};
    case Kind::Susp:
      throw UnsupportedInputError(
          "implicit strategy met a suspension node in its input");
  }
  throw Error("hn_eb: unreachable");
}

// ---------------------------------------------------------------------------
// Explicit strategy: every rewrite commits structure to the heap immediately.
// ---------------------------------------------------------------------------

// One reading rule applied at the suspension node s, rewriting s in place.
// Returns false only when the skeleton is a nested suspension that still has
// to be exposed first.
bool read_root_once(TermNode* s, RunCtx& cx) {
  const int ol = s->ol;
  const int nl = s->nl;
  Env env = s->env;
  TermNode* skel = deref(s->left);
  switch (skel->kind) {
    case Kind::Const:
    case Kind::FreeVar:
      cx.read();
      become_copy_of(s, skel);  // r1 / r2
      return true;
    case Kind::BoundIdx: {
      cx.read();
      const int i = skel->index;
      if (i > ol) {
        become_bound(s, i - ol + nl);  // r3
        return true;
      }
      const EnvNode& item = env_nth(env, i);
      if (is_dummy(item)) {
        become_bound(s, nl - item.level);  // r4
        return true;
      }
      if (nl == item.level) {
        assign(s, item.bound);  // r10
        return true;
      }
      TermNode* b = deref(item.bound);
      if (b->kind == Kind::Susp)
        become_susp(s, b->left, b->ol, b->nl + nl - item.level, b->env);  // r11
      else
        become_susp(s, b, 0, nl - item.level, nullptr);  // r12
      return true;
    }
    case Kind::App: {
      cx.read();
      TermNode* f = cx.arena.susp(skel->left, ol, nl, env);
      TermNode* a = cx.arena.susp(skel->right, ol, nl, env);
      become_app(s, f, a);  // r6
      return true;
    }
    case Kind::Lam: {
      cx.read();
      Env extended = cx.arena.dummy(nl, env);
      become_lam(s, cx.arena.susp(skel->left, ol + 1, nl + 1, extended));  // r7
      return true;
    }
    case Kind::Susp:
      return false;
    case Kind::Indirection:
      break;
  }
  throw Error("read_root_once: unreachable");
}

void lazy_read_impl(TermNode* t, RunCtx& cx) {
  DepthGuard guard(cx);
  for (;;) {
    TermNode* s = deref(t);
    if (s->kind != Kind::Susp) return;
    if (!read_root_once(s, cx)) lazy_read_impl(s->left, cx);
  }
}

// Chooses between (beta_s') and (beta_s) and rewrites the application node in
// place.
void beta_contract_ex(TermNode* app_node, TermNode* body, TermNode* arg,
                      RunCtx& cx) {
  TermNode* b = deref(body);
  if (b->kind == Kind::Susp && b->env != nullptr && is_dummy(*b->env) &&
      b->nl == b->env->level + 1) {
    const int level = b->env->level;
    Env extended = cx.arena.bind(arg, level, b->env->next);
    become_susp(app_node, b->left, b->ol, level, extended);
    return;
  }
  become_susp(app_node, body, 1, 0, cx.arena.bind(arg, 0, nullptr));
}

void hn_ex(TermNode* term, bool whnf, RunCtx& cx) {
  DepthGuard guard(cx);
  for (;;) {
    switch (term->kind) {
      case Kind::Indirection: {
        TermNode* target = deref(term);
        hn_ex(target, whnf, cx);
        assign(term, target);
        return;
      }
      case Kind::App: {
        hn_ex(term->left, true, cx);
        TermNode* f = deref(term->left);
        if (f->kind != Kind::Lam) return;
        cx.beta();
        beta_contract_ex(term, f->left, term->right, cx);
        continue;
      }
      case Kind::Lam:
        if (whnf) return;
        term = term->left;
        continue;
      case Kind::Susp:
        lazy_read_impl(term, cx);
        continue;
      default:
        return;
    }
  }
}

// ---------------------------------------------------------------------------
// Combined strategy: the environment-threading regime of the implicit
// procedure, committing suspensions to the heap only where sharing demands.
// ---------------------------------------------------------------------------

struct CoQuad {
  TermNode* term;
  int ol;
  int nl;
  Env env;

  bool trivial() const { return ol == 0 && nl == 0 && env == nullptr; }
};

CoQuad build_lam_co(TermNode* term, TermNode* body, int ol, int nl,
                    RunCtx& cx) {
  if (ol == 0 && nl == 0) return {term, 0, 0, nullptr};
  return {cx.arena.lam(body), 0, 0, nullptr};
}

CoQuad update_app_co(TermNode* term, CoQuad s, int ol, int nl) {
  if (s.trivial() && ol == 0 && nl == 0) {
    assign(term, s.term);
    return s;
  }
  return s;
}

TermNode* arg_node(TermNode* arg, int ol, int nl, Env env, RunCtx& cx) {
  if (ol == 0 && nl == 0 && env == nullptr) return arg;
  return cx.arena.susp(arg, ol, nl, env);
}

CoQuad build_app_co(TermNode* term, TermNode* fun, TermNode* arg, int ol,
                    int nl, Env env, RunCtx& cx) {
  if (ol == 0 && nl == 0 && env == nullptr) {
    assign(term, cx.arena.app(fun, arg));
    return {term, 0, 0, nullptr};
  }
  return {cx.arena.app(fun, cx.arena.susp(arg, ol, nl, env)), 0, 0, nullptr};
}

// Commits the (weak) head normal form held in the quadruple onto the
// suspension node. A non-trivial quadruple under a non-trivial outer
// environment is the pre-step of an abstraction whnf and has to be propagated
// through the binder (rule r7) for the reduction to progress.
CoQuad mk_explicit(TermNode* term, CoQuad q, int outer_ol, int outer_nl,
                   RunCtx& cx) {
  if (q.trivial()) {
    assign(term, q.term);
    return q;
  }
  if (outer_ol == 0 && outer_nl == 0) {
    assign(term, cx.arena.susp(q.term, q.ol, q.nl, q.env));
    return q;
  }
  TermNode* lam = deref(q.term);
  if (lam->kind != Kind::Lam)
    throw Error("pre-step quadruple with a rigid head");
  cx.read();
  Env extended = cx.arena.dummy(q.nl, q.env);
  TermNode* body = cx.arena.susp(lam->left, q.ol + 1, q.nl + 1, extended);
  assign(term, cx.arena.lam(body));
  return {term, 0, 0, nullptr};
}

CoQuad hn_co(TermNode* term, int ol, int nl, Env env, bool whnf, RunCtx& cx) {
  DepthGuard guard(cx);
  switch (term->kind) {
    case Kind::Indirection:
      return hn_co(deref(term), ol, nl, env, whnf, cx);
    case Kind::BoundIdx: {
      if (ol == 0 && nl == 0 && env == nullptr) return {term, 0, 0, nullptr};
      const int i = term->index;
      if (i > ol) return {cx.arena.bound(i - ol + nl), 0, 0, nullptr};
      const EnvNode& item = env_nth(env, i);
      if (is_dummy(item))
        return {cx.arena.bound(nl - item.level), 0, 0, nullptr};
      if (nl == item.level)
        return hn_co(item.bound, 0, 0, nullptr, whnf, cx);
      TermNode* b = deref(item.bound);
      if (b->kind == Kind::Susp)
        return hn_co(b->left, b->ol, b->nl + nl - item.level, b->env, whnf,
                     cx);
      return hn_co(b, 0, nl - item.level, nullptr, whnf, cx);
    }
    case Kind::Lam: {
      if (whnf) return {term, ol, nl, env};
      CoQuad q = (ol == 0 && nl == 0 && env == nullptr)
                     ? hn_co(term->left, 0, 0, nullptr, false, cx)
                     : hn_co(term->left, ol + 1, nl + 1,
                             cx.arena.dummy(nl, env), false, cx);
      return build_lam_co(term, q.term, ol, nl, cx);
    }
    case Kind::App: {
      CoQuad f = hn_co(term->left, ol, nl, env, true, cx);
      TermNode* fd = deref(f.term);
      if (fd->kind == Kind::Lam) {
        cx.beta();
        Env extended = cx.arena.bind(arg_node(term->right, ol, nl, env, cx),
                                     f.nl, f.env);
        CoQuad s = hn_co(fd->left, f.ol + 1, f.nl, extended, whnf, cx);
        return update_app_co(term, s, ol, nl);
      }
      if (!f.trivial())
        throw Error("pre-step quadruple with a rigid head");
      return build_app_co(term, fd, term->right, ol, nl, env, cx);
    }
    case Kind::Susp: {
      cx.read();  // one explicit suspension dissolved or recommitted
      CoQuad inner =
          hn_co(term->left, term->ol, term->nl, term->env, whnf, cx);
      CoQuad s = mk_explicit(term, inner, ol, nl, cx);
      if (ol == 0 && nl == 0) return s;
      return hn_co(term, ol, nl, env, whnf, cx);
    }
    case Kind::Const:
    case Kind::FreeVar:
      return {term, 0, 0, nullptr};
  }
  throw Error("hn_co: unreachable");
}

}  // namespace

TermNode* subst_implicit(TermNode* t, int ol, int nl, const ClosureEnvNode* env,
                         ClosurePool& pool, TermArena& arena) {
  RunCtx run{arena, kDefaultFuel};
  ImplicitCtx cx{run, pool};
  return subst_clo(t, ol, nl, env, cx);
}

void lazy_read(TermNode* t, TermArena& arena) {
  RunCtx run{arena, kDefaultFuel};
  lazy_read_impl(t, run);
}

void head_norm_implicit(TermNode* t, Form form, long long fuel,
                        TermArena& arena) {
  if (contains_susp(t))
    throw UnsupportedInputError(
        "implicit strategy met a suspension node in its input");
  RunCtx run{arena, fuel};
  ClosurePool pool;
  ImplicitCtx cx{run, pool};
  EbQuad q = hn_eb(t, 0, 0, nullptr, form == Form::Whnf, cx);
  if (q.trivial()) return;
  // Pre-step whnf of an abstraction: commit lam(subst(body)) so the public
  // boundary always hands back an actual weak head normal form.
  TermNode* lam = deref(q.term);
  if (form != Form::Whnf || lam->kind != Kind::Lam)
    throw Error("pre-step quadruple outside the abstraction whnf case");
  TermNode* body = subst_clo(lam->left, q.ol + 1, q.nl + 1,
                             pool.push_dummy(q.nl, q.env), cx);
  assign(t, arena.lam(body));
}

void head_norm_explicit(TermNode* t, Form form, long long fuel,
                        TermArena& arena) {
  RunCtx run{arena, fuel};
  hn_ex(t, form == Form::Whnf, run);
}

void head_norm_combined(TermNode* t, Form form, long long fuel,
                        TermArena& arena) {
  RunCtx run{arena, fuel};
  CoQuad q = hn_co(t, 0, 0, nullptr, form == Form::Whnf, run);
  if (q.trivial()) {
    if (deref(t) != deref(q.term)) assign(t, q.term);
    return;
  }
  TermNode* lam = deref(q.term);
  if (form != Form::Whnf || lam->kind != Kind::Lam)
    throw Error("pre-step quadruple outside the abstraction whnf case");
  Env extended = arena.dummy(q.nl, q.env);
  TermNode* body = arena.susp(lam->left, q.ol + 1, q.nl + 1, extended);
  assign(t, arena.lam(body));
}

void head_norm(TermNode* t, Strategy s, Form form, long long fuel,
               TermArena& arena) {
  switch (s) {
    case Strategy::Implicit: head_norm_implicit(t, form, fuel, arena); return;
    case Strategy::Explicit: head_norm_explicit(t, form, fuel, arena); return;
    case Strategy::Combined: head_norm_combined(t, form, fuel, arena); return;
  }
}

bool is_generalized_hnf(const TermNode* t) {
  const TermNode* d = deref(t);
  while (d->kind == Kind::Lam) d = deref(d->left);
  while (d->kind == Kind::App) d = deref(d->left);
  return d->kind == Kind::Const || d->kind == Kind::FreeVar ||
         d->kind == Kind::BoundIdx;
}

namespace {

void normalize_rec(TermNode* t, Strategy s, long long fuel, long long& used,
                   TermArena& arena, int depth) {
  if (depth > kMaxReductionDepth)
    throw ResourceLimitError("normalization depth limit exceeded");
  // head_norm tracks its own beta count; share the budget across the whole
  // normalization by shrinking the remaining fuel each round.
  long long before = arena.meter().beta_steps;
  try {
    head_norm(t, s, Form::Hnf, fuel - used, arena);
  } catch (const NonTerminatingError& e) {
    throw NonTerminatingError(used + e.steps);
  }
  used += arena.meter().beta_steps - before;
  TermNode* d = deref(t);
  while (d->kind == Kind::Lam) d = deref(d->left);
  std::vector<TermNode*> args;
  while (d->kind == Kind::App) {
    args.push_back(d->right);
    d = deref(d->left);
  }
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    normalize_rec(*it, s, fuel, used, arena, depth + 1);
}

}  // namespace

void normalize_full(TermNode* t, Strategy s, long long fuel, TermArena& arena) {
  long long used = 0;
  normalize_rec(t, s, fuel, used, arena, 0);
}

}  // namespace lamred
