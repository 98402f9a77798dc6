#include "doctest.h"

#include "lamred/parser.hpp"
#include "lamred/printer.hpp"
#include "support.hpp"

using namespace lamred;
using namespace lamred::testsupport;

TEST_CASE("parsing named terms") {
  TermArena a;

  SUBCASE("nested binders translate") {
    TermNode* t = parse_to_debruijn("\\x.\\y. x", a);
    CHECK(equal_structure(t, a.lam(a.lam(a.bound(2)))));
  }

  SUBCASE("redex with a constant argument") {
    TermNode* t = parse_to_debruijn("(\\x. x) c", a);
    CHECK(equal_structure(t, a.app(a.lam(a.bound(1)), a.constant("c"))));
  }

  SUBCASE("unbound lowercase identifiers are constants") {
    Parsed p = parse_term("\\x. x y", a);
    REQUIRE(p.named != nullptr);
    CHECK(free_vars(p.named).empty());
    TermNode* t = to_debruijn(p.named, a);
    CHECK(equal_structure(t, a.lam(a.app(a.bound(1), a.constant("y")))));
  }

  SUBCASE("uppercase identifiers are instantiatable variables") {
    TermNode* t = parse_to_debruijn("F c", a);
    CHECK(equal_structure(t, a.app(a.free_var("F"), a.constant("c"))));
  }
}

TEST_CASE("parsing de Bruijn terms") {
  TermArena a;

  SUBCASE("anonymous abstractions") {
    TermNode* t = parse_to_debruijn("\\ \\ #2", a);
    CHECK(equal_structure(t, a.lam(a.lam(a.bound(2)))));
  }

  SUBCASE("unicode lambda is an alias") {
    TermNode* t = parse_to_debruijn("λ λ #2", a);
    CHECK(equal_structure(t, a.lam(a.lam(a.bound(2)))));
  }

  SUBCASE("application associates left and binds tighter than lambda") {
    TermNode* t = parse_to_debruijn("\\ #1 #2 #3", a);
    CHECK(equal_structure(
        t, a.lam(a.app(a.app(a.bound(1), a.bound(2)), a.bound(3)))));
  }
}

TEST_CASE("parse errors") {
  TermArena a;
  CHECK_THROWS_AS(parse_to_debruijn("#0", a), ParseError);
  CHECK_THROWS_AS(parse_to_debruijn("", a), ParseError);
  CHECK_THROWS_AS(parse_to_debruijn("(a", a), ParseError);
  CHECK_THROWS_AS(parse_to_debruijn("a)", a), ParseError);
  CHECK_THROWS_AS(parse_to_debruijn("#", a), ParseError);
  CHECK_THROWS_AS(parse_to_debruijn("\\X. X", a), ParseError);

  SUBCASE("mixed named and indexed forms are rejected") {
    CHECK_THROWS_AS(parse_to_debruijn("\\x. #1", a), ParseError);
    CHECK_THROWS_AS(parse_to_debruijn("(\\x. x) (\\ #1)", a), ParseError);
  }

  SUBCASE("errors carry positions") {
    try {
      parse_to_debruijn("a \n  )", a);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 3);
    }
  }
}

TEST_CASE("formatting") {
  TermArena a;

  SUBCASE("compact style") {
    TermNode* t = a.lam(a.lam(a.bound(2)));
    CHECK(format_term(t) == "\\ \\ #2");
    TermNode* r = a.app(a.lam(a.bound(1)), a.constant("c"));
    CHECK(format_term(r) == "(\\ #1) c");
    TermNode* ap = a.app(a.constant("f"), a.app(a.constant("g"), a.constant("x")));
    CHECK(format_term(ap) == "f (g x)");
  }

  SUBCASE("unicode style") {
    TermNode* t = a.lam(a.lam(a.bound(2)));
    CHECK(format_term(t, TermStyle::Unicode) == "(λ (λ #2))");
  }

  SUBCASE("suspension notation") {
    TermNode* t = a.susp(a.bound(1), 1, 0, make_env(a, {{a.constant("c"), 0}}));
    CHECK(format_term(t) == "[#1, 1, 0, (c,0)::nil]");
    TermNode* u = a.susp(a.bound(1), 2, 3,
                         make_env(a, {{nullptr, 1}, {a.constant("b"), 2}}));
    CHECK(format_term(u) == "[#1, 2, 3, @1::(b,2)::nil]");
    CHECK(format_term(a.susp(a.constant("t"), 0, 1, nullptr)) ==
          "[t, 0, 1, nil]");
  }

  SUBCASE("indirections are transparent") {
    TermNode* c = a.constant("c");
    TermNode* t = a.indirection(a.indirection(c));
    CHECK(format_term(t) == "c");
  }
}

TEST_CASE("round trip on a random pure corpus") {
  SplitMix64 rng(83);
  for (int i = 0; i < 150; ++i) {
    TermArena a;
    TermNode* t = gen_closed_db(rng, a, 6, 0);
    for (TermStyle style : {TermStyle::Compact, TermStyle::Unicode}) {
      TermArena b;
      TermNode* back = parse_to_debruijn(format_term(t, style), b);
      CAPTURE(format_term(t, style));
      CHECK(equal_structure(back, t));
    }
  }
}
