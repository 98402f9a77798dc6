#include "doctest.h"

#include "lamred/parser.hpp"
#include "lamred/trace.hpp"

using namespace lamred;

TEST_CASE("trace of the worked derivation") {
  TermArena a;
  TermNode* t = parse_to_debruijn("(\\ ((\\ \\ ((#1 #2) #3)) t2)) t3", a);
  TraceResult tr = trace_explicit(t, 1000, TermStyle::Unicode, a);

  CHECK(tr.initial ==
        "((λ ((λ (λ ((#1 #2) #3))) t2)) t3)");
  REQUIRE(tr.steps.size() == 10);
  const RuleId expected[10] = {RuleId::BetaS, RuleId::R6,  RuleId::R7,
                               RuleId::BetaSPrime, RuleId::R7, RuleId::R6,
                               RuleId::R6,   RuleId::R4,  RuleId::R11,
                               RuleId::R12};
  for (int i = 0; i < 10; ++i) CHECK(tr.steps[i].rule == expected[i]);

  // The intermediate forms the derivation passes through.
  CHECK(tr.steps[0].snapshot ==
        "[((λ (λ ((#1 #2) #3))) t2), 1, 0, (t3,0)::nil]");
  CHECK(tr.steps[1].snapshot ==
        "([(λ (λ ((#1 #2) #3))), 1, 0, (t3,0)::nil] "
        "[t2, 1, 0, (t3,0)::nil])");
  CHECK(tr.steps[2].snapshot ==
        "((λ [(λ ((#1 #2) #3)), 2, 1, @0::(t3,0)::nil]) "
        "[t2, 1, 0, (t3,0)::nil])");
  CHECK(tr.steps[3].snapshot ==
        "[(λ ((#1 #2) #3)), 2, 0, "
        "([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]");
  CHECK(tr.steps[6].snapshot ==
        "(λ (([#1, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil] "
        "[#2, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]) "
        "[#3, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]))");
  CHECK(tr.steps[7].snapshot ==
        "(λ ((#1 [#2, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]) "
        "[#3, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]))");
  CHECK(tr.steps[8].snapshot ==
        "(λ ((#1 [t2, 1, 1, (t3,0)::nil]) "
        "[#3, 3, 1, @0::([t2, 1, 0, (t3,0)::nil],0)::(t3,0)::nil]))");
  CHECK(tr.steps[9].snapshot ==
        "(λ ((#1 [t2, 1, 1, (t3,0)::nil]) [t3, 0, 1, nil]))");
}

TEST_CASE("trace of a simple redex") {
  TermArena a;
  TermNode* t = parse_to_debruijn("(\\x. x) c", a);
  TraceResult tr = trace_explicit(t, 100, TermStyle::Compact, a);
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].rule == RuleId::BetaS);
  CHECK(tr.steps[1].rule == RuleId::R10);
  CHECK(tr.steps[1].snapshot == "c");
  CHECK_FALSE(tr.truncated);
}

TEST_CASE("trace respects max-steps") {
  TermArena a;
  TermNode* t = parse_to_debruijn("(\\ #1 #1) (\\ #1 #1)", a);
  TraceResult tr = trace_explicit(t, 7, TermStyle::Compact, a);
  CHECK(tr.steps.size() == 7);
  CHECK(tr.truncated);
}

TEST_CASE("rendered trace lines are machine-parseable") {
  TermArena a;
  TermNode* t = parse_to_debruijn("(\\x. x) c", a);
  TraceResult tr = trace_explicit(t, 100, TermStyle::Compact, a);
  std::string text = render_trace(tr);
  CHECK(text.rfind("START ", 0) == 0);
  CHECK(text.find("STEP 1 RULE beta_s AT / -> ") != std::string::npos);
  CHECK(text.find("STEP 2 RULE r10 AT / -> c") != std::string::npos);
}
