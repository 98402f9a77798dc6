#include "lamred/parser.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace lamred {

namespace {

enum class Tok : std::uint8_t {
  Lambda,
  Dot,
  LParen,
  RParen,
  Ident,
  Index,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int index = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src_[pos_];
    if (c == '\\') {
      advance();
      t.kind = Tok::Lambda;
      return t;
    }
    // U+03BB in UTF-8.
    if (c == '\xce' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\xbb') {
      advance();
      advance();
      t.kind = Tok::Lambda;
      return t;
    }
    if (c == '.') {
      advance();
      t.kind = Tok::Dot;
      return t;
    }
    if (c == '(') {
      advance();
      t.kind = Tok::LParen;
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Tok::RParen;
      return t;
    }
    if (c == '#') {
      advance();
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_];
        advance();
      }
      if (digits.empty())
        throw ParseError("'#' must be followed by digits", t.line, t.col);
      long value = 0;
      try {
        value = std::stol(digits);
      } catch (const std::exception&) {
        throw ParseError("index out of range", t.line, t.col);
      }
      if (value < 1)
        throw ParseError("de Bruijn indices start at 1", t.line, t.col);
      t.kind = Tok::Index;
      t.index = static_cast<int>(value);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
          name += d;
          advance();
        } else {
          break;
        }
      }
      t.kind = Tok::Ident;
      t.text = name;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line,
                     t.col);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        advance();
      else
        break;
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Surface tree prior to the named/indexed mode split.
struct SNode {
  enum class K : std::uint8_t { Ident, Upper, Index, App, NamedAbs, AnonAbs };
  K k;
  std::string name;  // Ident/Upper text, NamedAbs binder
  int index = 0;
  std::unique_ptr<SNode> a;  // App fun, Abs body
  std::unique_ptr<SNode> b;  // App arg
  int line = 1;
  int col = 1;
};

using SPtr = std::unique_ptr<SNode>;

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { bump(); }

  SPtr parse() {
    SPtr t = term();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input after term", cur_.line, cur_.col);
    return t;
  }

 private:
  void bump() {
    cur_ = have_ahead_ ? ahead_ : lex_.next();
    have_ahead_ = false;
  }

  const Token& peek() {
    if (!have_ahead_) {
      ahead_ = lex_.next();
      have_ahead_ = true;
    }
    return ahead_;
  }

  SPtr term() {
    if (cur_.kind == Tok::Lambda) {
      Token lam = cur_;
      bump();
      if (cur_.kind == Tok::Ident && peek().kind == Tok::Dot) {
        if (std::isupper(static_cast<unsigned char>(cur_.text[0])))
          throw ParseError("binder must be a lowercase identifier", cur_.line,
                           cur_.col);
        std::string binder = cur_.text;
        bump();  // binder
        bump();  // dot
        SPtr body = term();
        SPtr node = std::make_unique<SNode>();
        node->k = SNode::K::NamedAbs;
        node->name = std::move(binder);
        node->a = std::move(body);
        node->line = lam.line;
        node->col = lam.col;
        return node;
      }
      SPtr body = term();
      SPtr node = std::make_unique<SNode>();
      node->k = SNode::K::AnonAbs;
      node->a = std::move(body);
      node->line = lam.line;
      node->col = lam.col;
      return node;
    }
    return app();
  }

  bool starts_atom() const {
    return cur_.kind == Tok::Ident || cur_.kind == Tok::Index ||
           cur_.kind == Tok::LParen;
  }

  SPtr app() {
    SPtr t = atom();
    while (starts_atom()) {
      SPtr rhs = atom();
      SPtr node = std::make_unique<SNode>();
      node->k = SNode::K::App;
      node->line = t->line;
      node->col = t->col;
      node->a = std::move(t);
      node->b = std::move(rhs);
      t = std::move(node);
    }
    return t;
  }

  SPtr atom() {
    switch (cur_.kind) {
      case Tok::Ident: {
        SPtr node = std::make_unique<SNode>();
        node->k = std::isupper(static_cast<unsigned char>(cur_.text[0]))
                      ? SNode::K::Upper
                      : SNode::K::Ident;
        node->name = cur_.text;
        node->line = cur_.line;
        node->col = cur_.col;
        bump();
        return node;
      }
      case Tok::Index: {
        SPtr node = std::make_unique<SNode>();
        node->k = SNode::K::Index;
        node->index = cur_.index;
        node->line = cur_.line;
        node->col = cur_.col;
        bump();
        return node;
      }
      case Tok::LParen: {
        bump();
        SPtr t = term();
        if (cur_.kind != Tok::RParen)
          throw ParseError("expected ')'", cur_.line, cur_.col);
        bump();
        return t;
      }
      default:
        throw ParseError("expected a term", cur_.line, cur_.col);
    }
  }

  Lexer lex_;
  Token cur_;
  Token ahead_;
  bool have_ahead_ = false;
};

void scan_modes(const SNode* t, bool& named, bool& indexed) {
  switch (t->k) {
    case SNode::K::NamedAbs:
      named = true;
      scan_modes(t->a.get(), named, indexed);
      return;
    case SNode::K::AnonAbs:
      indexed = true;
      scan_modes(t->a.get(), named, indexed);
      return;
    case SNode::K::Index:
      indexed = true;
      return;
    case SNode::K::App:
      scan_modes(t->a.get(), named, indexed);
      scan_modes(t->b.get(), named, indexed);
      return;
    default:
      return;
  }
}

NamedPtr to_named(const SNode* t, std::vector<std::string>& scope) {
  switch (t->k) {
    case SNode::K::Ident: {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (*it == t->name) return named_absvar(t->name);
      return named_const(t->name);
    }
    case SNode::K::Upper:
      return named_instvar(t->name);
    case SNode::K::App:
      return named_app(to_named(t->a.get(), scope), to_named(t->b.get(), scope));
    case SNode::K::NamedAbs: {
      scope.push_back(t->name);
      NamedPtr body = to_named(t->a.get(), scope);
      scope.pop_back();
      return named_abs(t->name, body);
    }
    default:
      throw ParseError("de Bruijn form inside a named term", t->line, t->col);
  }
}

TermNode* to_indexed(const SNode* t, TermArena& arena) {
  switch (t->k) {
    case SNode::K::Ident:
      return arena.constant(t->name);
    case SNode::K::Upper:
      return arena.free_var(t->name);
    case SNode::K::Index:
      return arena.bound(t->index);
    case SNode::K::App: {
      TermNode* f = to_indexed(t->a.get(), arena);
      TermNode* a = to_indexed(t->b.get(), arena);
      return arena.app(f, a);
    }
    case SNode::K::AnonAbs:
      return arena.lam(to_indexed(t->a.get(), arena));
    default:
      throw ParseError("named binder inside a de Bruijn term", t->line, t->col);
  }
}

}  // namespace

Parsed parse_term(const std::string& src, TermArena& arena) {
  Parser parser(src);
  SPtr surface = parser.parse();
  bool named = false;
  bool indexed = false;
  scan_modes(surface.get(), named, indexed);
  if (named && indexed)
    throw ParseError("term mixes named binders with de Bruijn form",
                     surface->line, surface->col);
  Parsed out;
  if (named) {
    std::vector<std::string> scope;
    out.named = to_named(surface.get(), scope);
  } else {
    out.indexed = to_indexed(surface.get(), arena);
  }
  return out;
}

TermNode* parse_to_debruijn(const std::string& src, TermArena& arena) {
  Parsed p = parse_term(src, arena);
  if (p.indexed != nullptr) return p.indexed;
  return to_debruijn(p.named, arena);
}

}  // namespace lamred
