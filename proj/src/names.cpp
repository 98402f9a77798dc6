#include "lamred/names.hpp"

#include <vector>

namespace lamred {

namespace {

NamedPtr make(NamedTerm::Tag tag, std::string name, NamedPtr fun,
              NamedPtr arg) {
  return std::make_shared<const NamedTerm>(
      NamedTerm{tag, std::move(name), std::move(fun), std::move(arg)});
}

}  // namespace

NamedPtr named_const(std::string name) {
  return make(NamedTerm::Tag::Const, std::move(name), nullptr, nullptr);
}

NamedPtr named_absvar(std::string name) {
  return make(NamedTerm::Tag::AbsVar, std::move(name), nullptr, nullptr);
}

NamedPtr named_instvar(std::string name) {
  return make(NamedTerm::Tag::InstVar, std::move(name), nullptr, nullptr);
}

NamedPtr named_app(NamedPtr fun, NamedPtr arg) {
  return make(NamedTerm::Tag::App, {}, std::move(fun), std::move(arg));
}

NamedPtr named_abs(std::string binder, NamedPtr body) {
  return make(NamedTerm::Tag::Abs, std::move(binder), std::move(body),
              nullptr);
}

bool named_equal(const NamedPtr& a, const NamedPtr& b) {
  if (a == b) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case NamedTerm::Tag::Const:
    case NamedTerm::Tag::AbsVar:
    case NamedTerm::Tag::InstVar:
      return a->name == b->name;
    case NamedTerm::Tag::App:
      return named_equal(a->fun, b->fun) && named_equal(a->arg, b->arg);
    case NamedTerm::Tag::Abs:
      return a->name == b->name && named_equal(a->fun, b->fun);
  }
  return false;
}

std::string format_named(const NamedPtr& t) {
  switch (t->tag) {
    case NamedTerm::Tag::Const:
    case NamedTerm::Tag::AbsVar:
      return t->name;
    case NamedTerm::Tag::InstVar:
      return t->name;
    case NamedTerm::Tag::App:
      return "(" + format_named(t->fun) + " " + format_named(t->arg) + ")";
    case NamedTerm::Tag::Abs:
      return "(\\" + t->name + ". " + format_named(t->fun) + ")";
  }
  return "?";
}

namespace {

void collect_free(const NamedPtr& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t->tag) {
    case NamedTerm::Tag::Const:
    case NamedTerm::Tag::InstVar:
      return;
    case NamedTerm::Tag::AbsVar: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t->name) return;
      out.insert(t->name);
      return;
    }
    case NamedTerm::Tag::App:
      collect_free(t->fun, bound, out);
      collect_free(t->arg, bound, out);
      return;
    case NamedTerm::Tag::Abs:
      bound.push_back(t->name);
      collect_free(t->fun, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const NamedPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

NamedPtr subst_named(const NamedPtr& t, const std::string& x,
                     const NamedPtr& s) {
  switch (t->tag) {
    case NamedTerm::Tag::AbsVar:
      return t->name == x ? s : t;
    case NamedTerm::Tag::InstVar:
    case NamedTerm::Tag::Const:
      return t;
    case NamedTerm::Tag::App:
      return named_app(subst_named(t->fun, x, s), subst_named(t->arg, x, s));
    case NamedTerm::Tag::Abs: {
      const std::string& y = t->name;
      if (y == x) return t;
      std::set<std::string> fv_s = free_vars(s);
      if (fv_s.count(y) == 0)
        return named_abs(y, subst_named(t->fun, x, s));
      // Capture case: rename y to a variable outside FV(body) u FV(s) u {x}.
      std::set<std::string> avoid = free_vars(t->fun);
      avoid.insert(fv_s.begin(), fv_s.end());
      avoid.insert(x);
      std::string z;
      for (int suffix = 1;; ++suffix) {
        z = y + std::to_string(suffix);
        if (avoid.count(z) == 0) break;
      }
      NamedPtr renamed = subst_named(t->fun, y, named_absvar(z));
      return named_abs(z, subst_named(renamed, x, s));
    }
  }
  return t;
}

namespace {

TermNode* xi(const NamedPtr& t, std::vector<std::string>& binders,
             TermArena& arena) {
  switch (t->tag) {
    case NamedTerm::Tag::Const:
      return arena.constant(t->name);
    case NamedTerm::Tag::InstVar:
      return arena.free_var(t->name);
    case NamedTerm::Tag::AbsVar: {
      // Innermost occurrence wins, which is correct even when binder names
      // repeat.
      for (std::size_t k = 0; k < binders.size(); ++k) {
        if (binders[binders.size() - 1 - k] == t->name)
          return arena.bound(static_cast<int>(k) + 1);
      }
      throw TranslateError(t->name);
    }
    case NamedTerm::Tag::App: {
      TermNode* f = xi(t->fun, binders, arena);
      TermNode* a = xi(t->arg, binders, arena);
      return arena.app(f, a);
    }
    case NamedTerm::Tag::Abs: {
      binders.push_back(t->name);
      TermNode* body = xi(t->fun, binders, arena);
      binders.pop_back();
      return arena.lam(body);
    }
  }
  throw Error("to_debruijn: unreachable");
}

}  // namespace

TermNode* to_debruijn(const NamedPtr& t, TermArena& arena) {
  std::vector<std::string> binders;
  return xi(t, binders, arena);
}

bool alpha_eq(const NamedPtr& a, const NamedPtr& b) {
  TermArena scratch;
  return equal_structure(to_debruijn(a, scratch), to_debruijn(b, scratch));
}

}  // namespace lamred
