#include "lamred/trace.hpp"

#include <optional>
#include <sstream>

namespace lamred {

namespace {

struct Redex {
  TermNode* node;
  std::string path;
  bool beta;
};

// The position the explicit strategy rewrites next: the function part of an
// application is weak-head-normalized before the application itself is
// examined, abstraction bodies are entered in hnf mode, and a suspension with
// a suspension skeleton exposes the inner one first.
std::optional<Redex> find_redex(TermNode* t, const std::string& path,
                                bool whnf) {
  TermNode* d = deref(t);
  switch (d->kind) {
    case Kind::App: {
      if (auto r = find_redex(d->left, path + "/0", true)) return r;
      if (deref(d->left)->kind == Kind::Lam)
        return Redex{d, path, /*beta=*/true};
      return std::nullopt;
    }
    case Kind::Lam:
      if (whnf) return std::nullopt;
      return find_redex(d->left, path + "/0", false);
    case Kind::Susp: {
      if (deref(d->left)->kind == Kind::Susp)
        return find_redex(d->left, path + "/0", whnf);
      return Redex{d, path, /*beta=*/false};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

TraceResult trace_explicit(TermNode* t, long long max_steps, TermStyle style,
                           TermArena& arena) {
  TraceResult out;
  out.initial = format_term(t, style);
  long long taken = 0;

  auto log = [&](RuleId rule, const std::string& path) {
    out.steps.push_back(TraceStep{rule, path, format_term(t, style)});
    ++taken;
  };

  // Head reduction sequence.
  while (taken < max_steps) {
    auto redex = find_redex(t, "", false);
    if (!redex) break;
    auto step = redex->beta ? beta_step(redex->node, arena)
                            : reading_step(redex->node, arena);
    if (!step) break;
    assign(redex->node, step->result);
    log(step->rule, redex->path.empty() ? "/" : redex->path);
  }
  if (taken >= max_steps && find_redex(t, "", false)) {
    out.truncated = true;
    return out;
  }

  // Resolve each argument's variable references left to right; stop as soon
  // as an argument's top level is no longer a bound-variable suspension.
  TermNode* d = deref(t);
  std::string spine_path;
  while (d->kind == Kind::Lam) {
    spine_path += "/0";
    d = deref(d->left);
  }
  std::vector<std::pair<TermNode*, std::string>> args;
  std::vector<TermNode*> spine;
  for (TermNode* a = d; a->kind == Kind::App; a = deref(a->left))
    spine.push_back(a);
  // spine is outermost-first; argument i of m sits under i leading /0 hops.
  for (std::size_t i = 0; i < spine.size(); ++i) {
    std::string p = spine_path;
    for (std::size_t k = 0; k + 1 < spine.size() - i; ++k) p += "/0";
    args.push_back({spine[spine.size() - 1 - i]->right, p + "/1"});
  }
  for (auto& [arg, path] : args) {
    for (;;) {
      if (taken >= max_steps) {
        out.truncated = true;
        return out;
      }
      TermNode* a = deref(arg);
      if (a->kind != Kind::Susp || deref(a->left)->kind != Kind::BoundIdx)
        break;
      auto step = reading_step(a, arena);
      if (!step) break;
      assign(a, step->result);
      log(step->rule, path);
    }
  }
  return out;
}

std::string render_trace(const TraceResult& trace) {
  std::ostringstream os;
  os << "START " << trace.initial << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    os << "STEP " << (i + 1) << " RULE " << rule_name(s.rule) << " AT "
       << s.path << " -> " << s.snapshot << "\n";
  }
  if (trace.truncated) os << "TRUNCATED\n";
  return os.str();
}

}  // namespace lamred
