#ifndef LAMRED_PARSER_HPP
#define LAMRED_PARSER_HPP

#include <string>

#include "lamred/names.hpp"
#include "lamred/term.hpp"

namespace lamred {

struct ParseError : Error {
  ParseError(const std::string& what, int line_, int col_)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

// Exactly one of the two fields is set: `named` when the source used named
// binders ("\x. ..."), `indexed` when it was index-based or binder-free.
// Mixing named binders with de Bruijn indices or anonymous abstractions is a
// parse error.
struct Parsed {
  NamedPtr named;
  TermNode* indexed = nullptr;
};

// Surface grammar: term := '\' IDENT '.' term | '\' term | app;
// app := atom atom*; atom := lowercase ident (constant or bound occurrence) |
// Uppercase ident (instantiatable variable) | '#' digits | '(' term ')'.
// Unicode lambda is accepted as an alias for '\'. Applications associate to
// the left and bind tighter than abstractions.
Parsed parse_term(const std::string& src, TermArena& arena);

// parse_term followed by the name-to-index translation when needed; always a
// pure de Bruijn term.
TermNode* parse_to_debruijn(const std::string& src, TermArena& arena);

}  // namespace lamred

#endif
