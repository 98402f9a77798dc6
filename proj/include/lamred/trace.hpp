#ifndef LAMRED_TRACE_HPP
#define LAMRED_TRACE_HPP

#include <string>
#include <vector>

#include "lamred/printer.hpp"
#include "lamred/rules.hpp"
#include "lamred/term.hpp"

namespace lamred {

struct TraceStep {
  RuleId rule;
  std::string path;      // "/" is the root, "/0/1" child positions below it
  std::string snapshot;  // the whole term after the step
};

struct TraceResult {
  std::string initial;
  std::vector<TraceStep> steps;
  bool truncated = false;
};

// Single-step rule log of the explicit strategy's derivation: the head
// reduction sequence (one rewrite at a time, drawn from the rule engine and
// committed destructively), followed by the resolution of each argument's
// top-level variable references through its environment. Substitution
// propagation into the arguments stays suspended, so the log ends exactly
// where the environment no longer drives the arguments' shape.
TraceResult trace_explicit(TermNode* t, long long max_steps, TermStyle style,
                           TermArena& arena);

std::string render_trace(const TraceResult& trace);

}  // namespace lamred

#endif
