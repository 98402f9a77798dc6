#ifndef LAMRED_NAMES_HPP
#define LAMRED_NAMES_HPP

#include <memory>
#include <set>
#include <string>

#include "lamred/term.hpp"

namespace lamred {

// Raised by the name-to-index translation when an abstractable variable
// occurs free; carries the variable name.
struct TranslateError : Error {
  explicit TranslateError(const std::string& var)
      : Error("free abstractable variable '" + var + "'"), variable(var) {}
  std::string variable;
};

struct NamedTerm;
using NamedPtr = std::shared_ptr<const NamedTerm>;

// Immutable surface-syntax term with explicit bound-variable names.
struct NamedTerm {
  enum class Tag : std::uint8_t { Const, AbsVar, InstVar, App, Abs };

  Tag tag;
  std::string name;  // Const/AbsVar/InstVar name, Abs binder
  NamedPtr fun;      // App function, Abs body
  NamedPtr arg;      // App argument
};

NamedPtr named_const(std::string name);
NamedPtr named_absvar(std::string name);
NamedPtr named_instvar(std::string name);
NamedPtr named_app(NamedPtr fun, NamedPtr arg);
NamedPtr named_abs(std::string binder, NamedPtr body);

bool named_equal(const NamedPtr& a, const NamedPtr& b);
std::string format_named(const NamedPtr& t);

// Abstractable variables with at least one free occurrence.
std::set<std::string> free_vars(const NamedPtr& t);

// t[x := s] with capture avoidance; clashing binders are renamed to the
// shadowed name plus an incrementing numeric suffix.
NamedPtr subst_named(const NamedPtr& t, const std::string& x,
                     const NamedPtr& s);

// The translation into de Bruijn form; t must be closed with respect to
// abstractable variables (TranslateError otherwise). Output is a fresh pure
// de Bruijn term: constants and instantiatable variables pass through.
TermNode* to_debruijn(const NamedPtr& t, TermArena& arena);

// Alpha-equivalence decided by comparing de Bruijn translations.
bool alpha_eq(const NamedPtr& a, const NamedPtr& b);

}  // namespace lamred

#endif
