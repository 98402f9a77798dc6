#include "doctest.h"

#include "lamred/oracle.hpp"
#include "lamred/printer.hpp"
#include "lamred/rules.hpp"
#include "support.hpp"

using namespace lamred;
using namespace lamred::testsupport;

TEST_CASE("reading_step picks the rule the side conditions demand") {
  TermArena a;

  SUBCASE("r3: index past ol is renumbered") {
    TermNode* t = a.susp(a.bound(5), 2, 3,
                         make_env(a, {{nullptr, 0}, {a.constant("a"), 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R3);
    CHECK(equal_structure(s->result, a.bound(6)));
  }

  SUBCASE("r4: dummy entry renumbers against its level") {
    TermNode* t = a.susp(a.bound(1), 1, 4, make_env(a, {{nullptr, 1}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R4);
    CHECK(equal_structure(s->result, a.bound(3)));
  }

  SUBCASE("r10: binding at matching level substitutes directly") {
    TermNode* c = a.constant("c");
    TermNode* t = a.susp(a.bound(1), 1, 0, make_env(a, {{c, 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R10);
    CHECK(s->result == c);
  }

  SUBCASE("r7: abstraction skeleton pushes a dummy") {
    TermNode* t =
        a.susp(a.lam(a.bound(1)), 1, 0, make_env(a, {{a.constant("a"), 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R7);
    TermNode* expected = a.lam(
        a.susp(a.bound(1), 2, 1, make_env(a, {{nullptr, 0}, {a.constant("a"), 0}})));
    CHECK(equal_structure(s->result, expected));
  }

  SUBCASE("r11: suspension binding merges the renumbering") {
    TermNode* t2 = a.constant("t2");
    TermNode* t3 = a.constant("t3");
    TermNode* inner = a.susp(t2, 1, 0, make_env(a, {{t3, 0}}));
    TermNode* t =
        a.susp(a.bound(2), 2, 1, make_env(a, {{nullptr, 0}, {inner, 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R11);
    TermNode* expected = a.susp(t2, 1, 1, make_env(a, {{t3, 0}}));
    CHECK(equal_structure(s->result, expected));
  }

  SUBCASE("r12: non-suspension binding gets a pure renumbering suspension") {
    TermNode* c = a.constant("c");
    TermNode* t = a.susp(a.bound(1), 1, 2, make_env(a, {{c, 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R12);
    CHECK(equal_structure(s->result, a.susp(a.constant("c"), 0, 2, nullptr)));
  }

  SUBCASE("r1/r2 on constants and instantiatable variables") {
    TermNode* t = a.susp(a.constant("k"), 1, 2,
                         make_env(a, {{a.constant("x"), 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R1);
    CHECK(deref(s->result)->name == "k");

    TermNode* u = a.susp(a.free_var("V"), 0, 3, nullptr);
    auto s2 = reading_step(u, a);
    REQUIRE(s2);
    CHECK(s2->rule == RuleId::R2);
  }

  SUBCASE("r6 duplicates the environment over both halves") {
    TermNode* t = a.susp(a.app(a.constant("c"), a.constant("d")), 1, 0,
                         make_env(a, {{a.constant("a"), 0}}));
    auto s = reading_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::R6);
    TermNode* d = deref(s->result);
    REQUIRE(d->kind == Kind::App);
    CHECK(deref(d->left)->kind == Kind::Susp);
    CHECK(deref(d->right)->kind == Kind::Susp);
    CHECK(deref(d->left)->env == deref(d->right)->env);  // shared tail
  }

  SUBCASE("nested suspension skeleton: no rule fires at the root") {
    TermNode* inner = a.susp(a.bound(1), 0, 1, nullptr);
    TermNode* t = a.susp(inner, 0, 1, nullptr);
    CHECK_FALSE(reading_step(t, a));
  }

  SUBCASE("ill-formed suspension hard-fails") {
    TermNode* t = a.susp(a.bound(2), 2, 0, make_env(a, {{a.constant("a"), 0}}));
    CHECK_THROWS_AS(reading_step(t, a), IllFormedError);
  }
}

TEST_CASE("beta_step chooses beta_s versus beta_s'") {
  TermArena a;

  SUBCASE("plain redex uses beta_s") {
    TermNode* t = a.app(a.lam(a.bound(1)), a.constant("c"));
    auto s = beta_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::BetaS);
    TermNode* expected =
        a.susp(a.bound(1), 1, 0, make_env(a, {{a.constant("c"), 0}}));
    CHECK(equal_structure(s->result, expected));
  }

  SUBCASE("dummy-headed suspension body merges via beta_s'") {
    TermNode* t1 = a.constant("t1");
    TermNode* t3 = a.constant("t3");
    TermNode* body = a.susp(t1, 2, 1, make_env(a, {{nullptr, 0}, {t3, 0}}));
    TermNode* t = a.app(a.lam(body), a.constant("t2"));
    auto s = beta_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::BetaSPrime);
    TermNode* expected = a.susp(
        t1, 2, 0, make_env(a, {{a.constant("t2"), 0}, {a.constant("t3"), 0}}));
    CHECK(equal_structure(s->result, expected));
  }

  SUBCASE("suspension body whose top dummy level mismatches falls back") {
    TermNode* body = a.susp(a.constant("t1"), 2, 3,
                            make_env(a, {{nullptr, 0}, {a.constant("t3"), 0}}));
    TermNode* t = a.app(a.lam(body), a.constant("t2"));
    auto s = beta_step(t, a);
    REQUIRE(s);
    CHECK(s->rule == RuleId::BetaS);
  }

  SUBCASE("not a redex") {
    TermNode* t = a.app(a.constant("a"), a.constant("b"));
    CHECK_FALSE(beta_step(t, a));
    CHECK_FALSE(beta_step(a.constant("a"), a));
  }
}

TEST_CASE("read_out") {
  TermArena a;

  SUBCASE("environment lookup") {
    TermNode* t = a.susp(
        a.bound(2), 2, 0,
        make_env(a, {{a.constant("a"), 0}, {a.constant("b"), 0}}));
    CHECK(equal_structure(read_out(t, a), a.constant("b")));
  }

  SUBCASE("pure terms come back structurally equal") {
    TermArena out;
    SplitMix64 rng(31);
    for (int i = 0; i < 50; ++i) {
      TermNode* t = gen_closed_db(rng, a, 5, 0);
      CHECK(equal_structure(read_out(t, out), t));
    }
  }

  SUBCASE("the worked derivation's endpoint reads out to the pure form") {
    TermNode* t2 = a.constant("a");
    TermNode* t3 = a.constant("b");
    TermNode* arg1 = a.susp(t2, 1, 1, make_env(a, {{t3, 0}}));
    TermNode* arg2 = a.susp(t3, 0, 1, nullptr);
    TermNode* t = a.lam(a.app(a.app(a.bound(1), arg1), arg2));
    TermNode* expected = a.lam(
        a.app(a.app(a.bound(1), a.constant("a")), a.constant("b")));
    CHECK(equal_structure(read_out(t, a), expected));
  }
}

TEST_CASE("rule steps never mutate their input") {
  TermArena a;
  SplitMix64 rng(37);
  for (int i = 0; i < 100; ++i) {
    TermNode* t = gen_wf_susp(rng, a, 4);
    std::string before = format_term(t);
    if (deref(t)->kind == Kind::Susp) {
      (void)reading_step(t, a);
    } else {
      (void)beta_step(t, a);
    }
    CHECK(format_term(t) == before);
  }
}

TEST_CASE("a reading step commutes with read_out") {
  TermArena a;
  SplitMix64 rng(41);
  int stepped = 0;
  for (int i = 0; i < 200; ++i) {
    TermNode* t = gen_wf_susp(rng, a, 4);
    if (deref(t)->kind != Kind::Susp) continue;
    auto s = reading_step(t, a);
    if (!s) continue;
    ++stepped;
    TermArena out1, out2;
    CHECK(equal_structure(read_out(t, out1), read_out(s->result, out2)));
  }
  CHECK(stepped > 20);
}

TEST_CASE("randomized reading terminates within a polynomial budget") {
  TermArena a;
  SplitMix64 rng(43);
  for (int i = 0; i < 60; ++i) {
    TermNode* t = gen_wf_susp(rng, a, 4);
    std::size_t n = term_size(t);
    TermArena out;
    (void)oracle::randomized_read_out(t, 1000 + i, out);
    long long budget = 200 + static_cast<long long>(n) * static_cast<long long>(n);
    CHECK(oracle::last_randomized_step_count() <= budget);
  }
}
