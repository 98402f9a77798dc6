#include "lamred/printer.hpp"

#include <sstream>

namespace lamred {

namespace {

void print_term(const TermNode* t, TermStyle style, bool fun_pos, bool arg_pos,
                std::ostream& os);

void print_env_items(Env e, TermStyle style, std::ostream& os) {
  for (; e != nullptr; e = e->next) {
    if (is_dummy(*e)) {
      os << '@' << e->level;
    } else {
      os << '(';
      print_term(e->bound, style, false, false, os);
      os << ',' << e->level << ')';
    }
    os << "::";
  }
  os << "nil";
}

void print_susp(const TermNode* t, TermStyle style, std::ostream& os) {
  os << '[';
  print_term(t->left, style, false, false, os);
  os << ", " << t->ol << ", " << t->nl << ", ";
  print_env_items(t->env, style, os);
  os << ']';
}

void print_term(const TermNode* t, TermStyle style, bool fun_pos, bool arg_pos,
                std::ostream& os) {
  t = deref(t);
  switch (t->kind) {
    case Kind::Const:
    case Kind::FreeVar:
      os << t->name;
      return;
    case Kind::BoundIdx:
      os << '#' << t->index;
      return;
    case Kind::Susp:
      print_susp(t, style, os);
      return;
    case Kind::App: {
      if (style == TermStyle::Unicode) {
        os << '(';
        print_term(t->left, style, true, false, os);
        os << ' ';
        print_term(t->right, style, false, true, os);
        os << ')';
        return;
      }
      // Applications associate to the left, so only an argument that is
      // itself an application needs parentheses.
      bool parens = arg_pos;
      if (parens) os << '(';
      print_term(t->left, style, true, false, os);
      os << ' ';
      print_term(t->right, style, false, true, os);
      if (parens) os << ')';
      return;
    }
    case Kind::Lam: {
      if (style == TermStyle::Unicode) {
        os << "(λ ";
        print_term(t->left, style, false, false, os);
        os << ')';
        return;
      }
      bool parens = fun_pos || arg_pos;
      if (parens) os << '(';
      os << "\\ ";
      print_term(t->left, style, false, false, os);
      if (parens) os << ')';
      return;
    }
    case Kind::Indirection:
      return;  // unreachable after deref
  }
}

}  // namespace

std::string format_term(const TermNode* t, TermStyle style) {
  std::ostringstream os;
  print_term(t, style, false, false, os);
  return os.str();
}

std::string format_env(Env e, TermStyle style) {
  std::ostringstream os;
  print_env_items(e, style, os);
  return os.str();
}

}  // namespace lamred
