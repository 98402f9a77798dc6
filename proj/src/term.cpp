#include "lamred/term.hpp"

#include <unordered_set>
#include <utility>

namespace lamred {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Const: return "Const";
    case Kind::FreeVar: return "FreeVar";
    case Kind::BoundIdx: return "BoundIdx";
    case Kind::App: return "App";
    case Kind::Lam: return "Lam";
    case Kind::Susp: return "Susp";
    case Kind::Indirection: return "Indirection";
  }
  return "?";
}

TermNode* TermArena::fresh(Kind k) {
  check_budget();
  nodes_.push_back(TermNode{k, 0, 0, 0, nullptr, nullptr, nullptr, {}});
  meter_.record_term(k);
  return &nodes_.back();
}

void TermArena::check_budget() {
  if (nodes_.size() + env_nodes_.size() >= node_budget_)
    throw ResourceLimitError("term arena node budget exhausted");
}

TermNode* TermArena::constant(std::string name) {
  TermNode* t = fresh(Kind::Const);
  t->name = std::move(name);
  return t;
}

TermNode* TermArena::free_var(std::string name) {
  TermNode* t = fresh(Kind::FreeVar);
  t->name = std::move(name);
  return t;
}

TermNode* TermArena::bound(int index) {
  if (index < 1) throw IllFormedError("bound index must be >= 1");
  TermNode* t = fresh(Kind::BoundIdx);
  t->index = index;
  return t;
}

TermNode* TermArena::app(TermNode* fun, TermNode* arg) {
  TermNode* t = fresh(Kind::App);
  t->left = fun;
  t->right = arg;
  return t;
}

TermNode* TermArena::lam(TermNode* body) {
  TermNode* t = fresh(Kind::Lam);
  t->left = body;
  return t;
}

TermNode* TermArena::susp(TermNode* skeleton, int ol, int nl, Env env) {
  TermNode* t = fresh(Kind::Susp);
  t->left = skeleton;
  t->ol = ol;
  t->nl = nl;
  t->env = env;
  return t;
}

TermNode* TermArena::indirection(TermNode* target) {
  TermNode* t = fresh(Kind::Indirection);
  t->left = target;
  return t;
}

Env TermArena::bind(TermNode* bound, int level, Env next) {
  check_budget();
  env_nodes_.push_back(EnvNode{bound, level, next});
  meter_.record_binding();
  return &env_nodes_.back();
}

Env TermArena::dummy(int level, Env next) {
  check_budget();
  env_nodes_.push_back(EnvNode{nullptr, level, next});
  meter_.record_dummy();
  return &env_nodes_.back();
}

TermNode* deref(TermNode* t) {
  while (t->kind == Kind::Indirection) t = t->left;
  return t;
}

const TermNode* deref(const TermNode* t) {
  while (t->kind == Kind::Indirection) t = t->left;
  return t;
}

void assign(TermNode* dst, TermNode* src) {
  TermNode* target = deref(src);
  dst->kind = Kind::Indirection;
  dst->left = target;
  dst->right = nullptr;
  dst->env = nullptr;
  dst->name.clear();
}

void become_bound(TermNode* t, int index) {
  if (index < 1) throw IllFormedError("bound index must be >= 1");
  t->kind = Kind::BoundIdx;
  t->index = index;
  t->left = t->right = nullptr;
  t->env = nullptr;
  t->name.clear();
}

void become_app(TermNode* t, TermNode* fun, TermNode* arg) {
  t->kind = Kind::App;
  t->left = fun;
  t->right = arg;
  t->env = nullptr;
  t->name.clear();
}

void become_lam(TermNode* t, TermNode* body) {
  t->kind = Kind::Lam;
  t->left = body;
  t->right = nullptr;
  t->env = nullptr;
  t->name.clear();
}

void become_susp(TermNode* t, TermNode* skeleton, int ol, int nl, Env env) {
  t->kind = Kind::Susp;
  t->left = skeleton;
  t->right = nullptr;
  t->ol = ol;
  t->nl = nl;
  t->env = env;
  t->name.clear();
}

void become_copy_of(TermNode* t, const TermNode* src) {
  t->kind = src->kind;
  t->index = src->index;
  t->ol = src->ol;
  t->nl = src->nl;
  t->left = src->left;
  t->right = src->right;
  t->env = src->env;
  t->name = src->name;
}

std::size_t env_length(Env e) {
  std::size_t n = 0;
  for (; e != nullptr; e = e->next) ++n;
  return n;
}

const EnvNode& env_nth(Env e, int i) {
  if (i < 1) throw IllFormedError("environment index must be >= 1");
  for (; e != nullptr; e = e->next) {
    if (--i == 0) return *e;
  }
  throw IllFormedError("environment index out of range");
}

namespace {

void check_node(const TermNode* t, std::unordered_set<const TermNode*>& seen,
                std::vector<Violation>& out) {
  t = deref(t);
  if (!seen.insert(t).second) return;
  switch (t->kind) {
    case Kind::Const:
    case Kind::FreeVar:
      return;
    case Kind::BoundIdx:
      if (t->index < 1) out.push_back({t, "bound index must be >= 1"});
      return;
    case Kind::App:
      check_node(t->left, seen, out);
      check_node(t->right, seen, out);
      return;
    case Kind::Lam:
      check_node(t->left, seen, out);
      return;
    case Kind::Susp: {
      if (t->ol < 0 || t->nl < 0)
        out.push_back({t, "suspension indices must be non-negative"});
      std::size_t len = env_length(t->env);
      if (static_cast<std::size_t>(t->ol) != len)
        out.push_back({t, "environment length " + std::to_string(len) +
                              " differs from ol " + std::to_string(t->ol)});
      for (Env e = t->env; e != nullptr; e = e->next) {
        if (is_dummy(*e)) {
          if (e->level >= t->nl)
            out.push_back({t, "dummy level " + std::to_string(e->level) +
                                  " must be < nl " + std::to_string(t->nl)});
        } else {
          if (e->level > t->nl)
            out.push_back({t, "binding level " + std::to_string(e->level) +
                                  " must be <= nl " + std::to_string(t->nl)});
          check_node(e->bound, seen, out);
        }
      }
      check_node(t->left, seen, out);
      return;
    }
    case Kind::Indirection:
      return;  // unreachable after deref
  }
}

}  // namespace

std::vector<Violation> check_well_formed(const TermNode* t) {
  std::vector<Violation> out;
  std::unordered_set<const TermNode*> seen;
  check_node(t, seen, out);
  return out;
}

bool equal_structure(const TermNode* a, const TermNode* b) {
  a = deref(a);
  b = deref(b);
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Const:
    case Kind::FreeVar:
      return a->name == b->name;
    case Kind::BoundIdx:
      return a->index == b->index;
    case Kind::App:
      return equal_structure(a->left, b->left) &&
             equal_structure(a->right, b->right);
    case Kind::Lam:
      return equal_structure(a->left, b->left);
    case Kind::Susp: {
      if (a->ol != b->ol || a->nl != b->nl) return false;
      Env ea = a->env;
      Env eb = b->env;
      while (ea != nullptr && eb != nullptr) {
        if (is_dummy(*ea) != is_dummy(*eb) || ea->level != eb->level)
          return false;
        if (!is_dummy(*ea) && !equal_structure(ea->bound, eb->bound))
          return false;
        ea = ea->next;
        eb = eb->next;
      }
      if (ea != nullptr || eb != nullptr) return false;
      return equal_structure(a->left, b->left);
    }
    case Kind::Indirection:
      return false;  // unreachable after deref
  }
  return false;
}

namespace {

bool scan_for(const TermNode* t, Kind needle, bool through_indirections) {
  const TermNode* d = through_indirections ? deref(t) : t;
  if (!through_indirections && t->kind == Kind::Indirection) return true;
  if (d->kind == needle) return true;
  switch (d->kind) {
    case Kind::App:
      return scan_for(d->left, needle, through_indirections) ||
             scan_for(d->right, needle, through_indirections);
    case Kind::Lam:
      return scan_for(d->left, needle, through_indirections);
    case Kind::Susp: {
      if (scan_for(d->left, needle, through_indirections)) return true;
      for (Env e = d->env; e != nullptr; e = e->next) {
        if (!is_dummy(*e) && scan_for(e->bound, needle, through_indirections))
          return true;
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace

bool is_pure_debruijn(const TermNode* t) {
  if (t->kind == Kind::Indirection) return false;
  if (t->kind == Kind::Susp) return false;
  switch (t->kind) {
    case Kind::App:
      return is_pure_debruijn(t->left) && is_pure_debruijn(t->right);
    case Kind::Lam:
      return is_pure_debruijn(t->left);
    default:
      return true;
  }
}

bool contains_susp(const TermNode* t) {
  return scan_for(t, Kind::Susp, /*through_indirections=*/true);
}

TermNode* copy_term(const TermNode* t, TermArena& dst) {
  const TermNode* d = deref(t);
  switch (d->kind) {
    case Kind::Const:
      return dst.constant(d->name);
    case Kind::FreeVar:
      return dst.free_var(d->name);
    case Kind::BoundIdx:
      return dst.bound(d->index);
    case Kind::App:
      return dst.app(copy_term(d->left, dst), copy_term(d->right, dst));
    case Kind::Lam:
      return dst.lam(copy_term(d->left, dst));
    case Kind::Susp: {
      // Rebuild the environment back-to-front to keep list order.
      std::vector<const EnvNode*> items;
      for (Env e = d->env; e != nullptr; e = e->next) items.push_back(e);
      Env env = nullptr;
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        if (is_dummy(**it))
          env = dst.dummy((*it)->level, env);
        else
          env = dst.bind(copy_term((*it)->bound, dst), (*it)->level, env);
      }
      return dst.susp(copy_term(d->left, dst), d->ol, d->nl, env);
    }
    case Kind::Indirection:
      break;
  }
  throw Error("copy_term: unreachable");
}

}  // namespace lamred
