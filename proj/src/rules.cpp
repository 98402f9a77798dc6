#include "lamred/rules.hpp"

namespace lamred {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::BetaS: return "beta_s";
    case RuleId::BetaSPrime: return "beta_s'";
    case RuleId::R1: return "r1";
    case RuleId::R2: return "r2";
    case RuleId::R3: return "r3";
    case RuleId::R4: return "r4";
    case RuleId::R6: return "r6";
    case RuleId::R7: return "r7";
    case RuleId::R10: return "r10";
    case RuleId::R11: return "r11";
    case RuleId::R12: return "r12";
  }
  return "?";
}

namespace {

std::optional<RuleStep> reading_step_impl(TermNode* t, TermArena& arena) {
  TermNode* s = deref(t);
  if (s->kind != Kind::Susp)
    throw IllFormedError("reading_step expects a suspension");
  const int ol = s->ol;
  const int nl = s->nl;
  Env env = s->env;
  TermNode* skel = deref(s->left);
  switch (skel->kind) {
    case Kind::Const:
      return RuleStep{RuleId::R1, skel};
    case Kind::FreeVar:
      return RuleStep{RuleId::R2, skel};
    case Kind::BoundIdx: {
      const int i = skel->index;
      if (i > ol)
        return RuleStep{RuleId::R3, arena.bound(i - ol + nl)};
      const EnvNode& item = env_nth(env, i);
      if (is_dummy(item))
        return RuleStep{RuleId::R4, arena.bound(nl - item.level)};
      if (nl == item.level)
        return RuleStep{RuleId::R10, deref(item.bound)};
      TermNode* b = deref(item.bound);
      if (b->kind == Kind::Susp)
        return RuleStep{RuleId::R11,
                        arena.susp(b->left, b->ol, b->nl + nl - item.level,
                                   b->env)};
      return RuleStep{RuleId::R12, arena.susp(b, 0, nl - item.level, nullptr)};
    }
    case Kind::App: {
      TermNode* f = arena.susp(skel->left, ol, nl, env);
      TermNode* a = arena.susp(skel->right, ol, nl, env);
      return RuleStep{RuleId::R6, arena.app(f, a)};
    }
    case Kind::Lam: {
      Env extended = arena.dummy(nl, env);
      TermNode* body = arena.susp(skel->left, ol + 1, nl + 1, extended);
      return RuleStep{RuleId::R7, arena.lam(body)};
    }
    case Kind::Susp:
      return std::nullopt;  // nested case, handled by the strategies
    case Kind::Indirection:
      break;
  }
  throw Error("reading_step: unreachable");
}

}  // namespace

std::optional<RuleStep> reading_step(TermNode* t, TermArena& arena) {
  std::optional<RuleStep> step = reading_step_impl(t, arena);
  if (step) arena.meter().reading_steps++;
  return step;
}

std::optional<RuleStep> beta_step(TermNode* t, TermArena& arena) {
  TermNode* s = deref(t);
  if (s->kind != Kind::App) return std::nullopt;
  TermNode* f = deref(s->left);
  if (f->kind != Kind::Lam) return std::nullopt;
  TermNode* arg = s->right;
  TermNode* body = deref(f->left);
  arena.meter().beta_steps++;
  // (beta_s') requires the body to be the suspension produced by pushing
  // [lam t1, ol, nl, e] through the abstraction: indices ol+1/nl+1 with a
  // dummy at level nl on top.
  if (body->kind == Kind::Susp && body->env != nullptr &&
      is_dummy(*body->env) && body->nl == body->env->level + 1) {
    const int level = body->env->level;
    Env extended = arena.bind(arg, level, body->env->next);
    return RuleStep{RuleId::BetaSPrime,
                    arena.susp(body->left, body->ol, level, extended)};
  }
  Env env = arena.bind(arg, 0, nullptr);
  return RuleStep{RuleId::BetaS, arena.susp(f->left, 1, 0, env)};
}

namespace {

// The de Bruijn term underlying [skel, ol, nl, env], built fresh in `arena`.
TermNode* read_out_susp(TermNode* skel, int ol, int nl, Env env,
                        TermArena& arena) {
  TermNode* s = deref(skel);
  switch (s->kind) {
    case Kind::Const:
      return arena.constant(s->name);
    case Kind::FreeVar:
      return arena.free_var(s->name);
    case Kind::BoundIdx: {
      const int i = s->index;
      if (i > ol) return arena.bound(i - ol + nl);
      const EnvNode& item = env_nth(env, i);
      if (is_dummy(item)) return arena.bound(nl - item.level);
      TermNode* b = deref(item.bound);
      if (nl == item.level) return read_out_susp(b, 0, 0, nullptr, arena);
      if (b->kind == Kind::Susp)
        return read_out_susp(b->left, b->ol, b->nl + nl - item.level, b->env,
                             arena);
      return read_out_susp(b, 0, nl - item.level, nullptr, arena);
    }
    case Kind::App:
      return arena.app(read_out_susp(s->left, ol, nl, env, arena),
                       read_out_susp(s->right, ol, nl, env, arena));
    case Kind::Lam: {
      Env extended = arena.dummy(nl, env);
      return arena.lam(read_out_susp(s->left, ol + 1, nl + 1, extended, arena));
    }
    case Kind::Susp: {
      // Nested suspension in skeleton position: read the inner one out first.
      TermNode* inner = read_out_susp(s->left, s->ol, s->nl, s->env, arena);
      return read_out_susp(inner, ol, nl, env, arena);
    }
    case Kind::Indirection:
      break;
  }
  throw Error("read_out: unreachable");
}

}  // namespace

TermNode* read_out(TermNode* t, TermArena& arena) {
  return read_out_susp(t, 0, 0, nullptr, arena);
}

}  // namespace lamred
