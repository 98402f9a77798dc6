#include "lamred/bench.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "lamred/rng.hpp"
#include "lamred/rules.hpp"
#include "lamred/stack.hpp"

#include "json.hpp"

namespace lamred {
namespace bench {

TermNode* comb_s(TermArena& a) {
  // S = \ \ \ ((#3 #1) (#2 #1))
  TermNode* body = a.app(a.app(a.bound(3), a.bound(1)),
                         a.app(a.bound(2), a.bound(1)));
  return a.lam(a.lam(a.lam(body)));
}

TermNode* comb_k(TermArena& a) { return a.lam(a.lam(a.bound(2))); }

TermNode* comb_i(TermArena& a) { return a.lam(a.bound(1)); }

TermNode* church(int n, TermArena& a) {
  TermNode* body = a.bound(1);
  for (int i = 0; i < n; ++i) body = a.app(a.bound(2), body);
  return a.lam(a.lam(body));
}

TermNode* church_plus(TermArena& a) {
  // \ \ \ \ ((#4 #2) ((#3 #2) #1))
  TermNode* body = a.app(a.app(a.bound(4), a.bound(2)),
                         a.app(a.app(a.bound(3), a.bound(2)), a.bound(1)));
  return a.lam(a.lam(a.lam(a.lam(body))));
}

TermNode* church_mult(TermArena& a) {
  // \ \ \ (#3 (#2 #1))
  TermNode* body = a.app(a.bound(3), a.app(a.bound(2), a.bound(1)));
  return a.lam(a.lam(a.lam(body)));
}

int church_value(const TermNode* t) {
  const TermNode* d = deref(t);
  if (d->kind != Kind::Lam) return -1;
  d = deref(d->left);
  if (d->kind != Kind::Lam) return -1;
  d = deref(d->left);
  int n = 0;
  while (d->kind == Kind::App) {
    const TermNode* f = deref(d->left);
    if (f->kind != Kind::BoundIdx || f->index != 2) return -1;
    ++n;
    d = deref(d->right);
  }
  if (d->kind != Kind::BoundIdx || d->index != 1) return -1;
  return n;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Normalized: return "normalized";
    case Outcome::NonTerminating: return "nonterminating";
    case Outcome::ResourceLimit: return "resource-limit";
    case Outcome::Mismatch: return "mismatch";
  }
  return "?";
}

std::uint64_t case_seed(std::uint64_t suite_seed, int index) {
  SplitMix64 rng(suite_seed ^ (0xabcd0123u + static_cast<std::uint64_t>(index)));
  return rng.next();
}

namespace {

TermNode* random_ski_tree(int internal_nodes, SplitMix64& rng, TermArena& a) {
  if (internal_nodes == 0) {
    switch (rng.below(3)) {
      case 0: return comb_s(a);
      case 1: return comb_k(a);
      default: return comb_i(a);
    }
  }
  int left = static_cast<int>(rng.below(static_cast<std::uint64_t>(internal_nodes)));
  TermNode* f = random_ski_tree(left, rng, a);
  TermNode* x = random_ski_tree(internal_nodes - 1 - left, rng, a);
  return a.app(f, x);
}

}  // namespace

BuiltCase build_case(const SuiteSpec& spec, int index, TermArena& arena) {
  SplitMix64 rng(case_seed(spec.seed, index));
  if (spec.suite == "ski") {
    TermNode* t = random_ski_tree(spec.size, rng, arena);
    return {"ski-" + std::to_string(index), t, nullptr};
  }
  if (spec.suite == "church") {
    // Even cases are sums, odd cases products; products are capped so the
    // result stays within `size`.
    if (index % 2 == 0) {
      int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.size) + 1));
      int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.size) + 1));
      TermNode* t = arena.app(arena.app(church_plus(arena), church(a, arena)),
                              church(b, arena));
      return {"church-plus-" + std::to_string(a) + "-" + std::to_string(b), t,
              church(a + b, arena)};
    }
    int cap = static_cast<int>(std::sqrt(static_cast<double>(spec.size)));
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
    TermNode* t = arena.app(arena.app(church_mult(arena), church(a, arena)),
                            church(b, arena));
    return {"church-mult-" + std::to_string(a) + "-" + std::to_string(b), t,
            church(a * b, arena)};
  }
  throw Error("unknown suite '" + spec.suite + "'");
}

namespace {

StrategyRun run_suite_impl(const SuiteSpec& spec, Strategy strategy) {
  StrategyRun run;
  run.strategy = strategy;
  run.cases.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    TermArena arena;
    BuiltCase c = build_case(spec, i, arena);
    TermNode* expected = c.expected;
    arena.meter().reset();  // charge only the normalization itself
    CaseRun cr;
    cr.name = c.name;
    cr.outcome = Outcome::Normalized;
    try {
      normalize_full(c.term, strategy, spec.fuel, arena);
      if (expected != nullptr) {
        TermArena scratch;
        TermNode* got = read_out(c.term, scratch);
        if (!equal_structure(got, expected)) cr.outcome = Outcome::Mismatch;
      }
    } catch (const NonTerminatingError&) {
      cr.outcome = Outcome::NonTerminating;
    } catch (const ResourceLimitError&) {
      cr.outcome = Outcome::ResourceLimit;
    }
    cr.meter = arena.meter();
    run.cases.push_back(std::move(cr));
  }
  return run;
}

}  // namespace

StrategyRun run_suite(const SuiteSpec& spec, Strategy strategy) {
  StrategyRun run;
  run_with_stack(kBigStackBytes,
                 [&] { run = run_suite_impl(spec, strategy); });
  return run;
}

BenchReport aggregate(const SuiteSpec& spec, const StrategyRun& run,
                      const std::vector<bool>& excluded,
                      const ByteModel& model) {
  BenchReport report;
  report.spec = spec;
  report.strategy = strategy_name(run.strategy);
  report.byte_model = model;
  for (std::size_t i = 0; i < run.cases.size(); ++i) {
    const CaseRun& c = run.cases[i];
    if (c.outcome != Outcome::Normalized)
      report.nonterminating_cases.push_back(c.name);
    if (i < excluded.size() && excluded[i]) continue;
    ++report.cases_counted;
    for (int k = 0; k < kTermKindCount; ++k)
      report.totals.term_counts[k] += c.meter.term_counts[k];
    report.totals.dummy_count += c.meter.dummy_count;
    report.totals.binding_count += c.meter.binding_count;
    report.totals.beta_steps += c.meter.beta_steps;
    report.totals.reading_steps += c.meter.reading_steps;
  }
  return report;
}

namespace {

std::vector<bool> failures(const StrategyRun& run) {
  std::vector<bool> out(run.cases.size(), false);
  for (std::size_t i = 0; i < run.cases.size(); ++i)
    out[i] = run.cases[i].outcome != Outcome::Normalized;
  return out;
}

}  // namespace

std::vector<BenchReport> compare_suites(const SuiteSpec& spec,
                                        const ByteModel& model) {
  const Strategy order[3] = {Strategy::Implicit, Strategy::Explicit,
                             Strategy::Combined};
  std::vector<StrategyRun> runs;
  for (Strategy s : order) runs.push_back(run_suite(spec, s));
  std::vector<bool> excluded(static_cast<std::size_t>(spec.count), false);
  for (const StrategyRun& r : runs) {
    std::vector<bool> f = failures(r);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i]) excluded[i] = true;
  }
  std::vector<BenchReport> reports;
  for (const StrategyRun& r : runs)
    reports.push_back(aggregate(spec, r, excluded, model));
  return reports;
}

BenchReport run_benchmark(const SuiteSpec& spec, Strategy strategy,
                          const ByteModel& model) {
  StrategyRun run = run_suite(spec, strategy);
  return aggregate(spec, run, failures(run), model);
}

static const char* kKindNames[kTermKindCount] = {
    "Const", "FreeVar", "BoundIdx", "App", "Lam", "Susp", "Indirection"};

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = spec.suite;
  j["seed"] = spec.seed;
  j["params"] = {{"count", spec.count},
                 {"size", spec.size},
                 {"fuel", spec.fuel},
                 {"rng", rng_algorithm_id()},
                 {"byte_model", byte_model.describe()}};
  j["strategy"] = strategy;
  nlohmann::ordered_json kinds;
  for (int k = 0; k < kTermKindCount; ++k)
    kinds[kKindNames[k]] = totals.term_counts[k];
  j["nodes_by_kind"] = kinds;
  j["env_items"] = totals.env_items();
  j["total_nodes"] = totals.total_nodes();
  j["total_bytes"] = totals.total_bytes(byte_model);
  j["beta_steps"] = totals.beta_steps;
  j["reading_steps"] = totals.reading_steps;
  j["nonterminating_cases"] = nonterminating_cases;
  return j.dump(2);
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "suite " << spec.suite << " seed " << spec.seed << " count "
     << spec.count << " size " << spec.size << " fuel " << spec.fuel
     << " rng " << rng_algorithm_id() << "\n";
  os << "byte model: " << byte_model.describe() << "\n";
  os << "strategy " << strategy << " (" << cases_counted
     << " cases counted)\n";
  for (int k = 0; k < kTermKindCount; ++k)
    os << "  " << std::left << std::setw(12) << kKindNames[k]
       << totals.term_counts[k] << "\n";
  os << "  " << std::left << std::setw(12) << "Dummy" << totals.dummy_count
     << "\n";
  os << "  " << std::left << std::setw(12) << "Binding" << totals.binding_count
     << "\n";
  os << "  total nodes " << totals.total_nodes() << ", env items "
     << totals.env_items() << ", bytes " << totals.total_bytes(byte_model)
     << "\n";
  os << "  beta steps " << totals.beta_steps << ", reading steps "
     << totals.reading_steps << ", nonterminating "
     << nonterminating_cases.size() << "\n";
  return os.str();
}

std::string BenchReport::csv_header() {
  return "suite,seed,count,size,fuel,strategy,total_nodes,env_items,"
         "total_bytes,beta_steps,reading_steps,nonterminating";
}

std::string BenchReport::to_csv_row() const {
  std::ostringstream os;
  os << spec.suite << ',' << spec.seed << ',' << spec.count << ',' << spec.size
     << ',' << spec.fuel << ',' << strategy << ',' << totals.total_nodes()
     << ',' << totals.env_items() << ',' << totals.total_bytes(byte_model)
     << ',' << totals.beta_steps << ',' << totals.reading_steps << ','
     << nonterminating_cases.size();
  return os.str();
}

std::string render_comparison_table(const std::vector<BenchReport>& reports) {
  std::ostringstream os;
  if (reports.empty()) return "";
  const BenchReport& first = reports.front();
  os << "suite " << first.spec.suite << " (seed " << first.spec.seed
     << ", count " << first.spec.count << ", size " << first.spec.size
     << ", fuel " << first.spec.fuel << ", rng " << rng_algorithm_id()
     << ")\n";
  os << "byte model: " << first.byte_model.describe() << "\n";
  os << std::left << std::setw(22) << "";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16) << r.strategy;
  os << "\n";
  os << std::left << std::setw(22) << "term nodes created";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16) << r.totals.total_nodes();
  os << "\n";
  os << std::left << std::setw(22) << "bytes occupied";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16) << r.totals.total_bytes(r.byte_model);
  os << "\n";
  os << std::left << std::setw(22) << "env items";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16) << r.totals.env_items();
  os << "\n";
  os << std::left << std::setw(22) << "beta steps";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16) << r.totals.beta_steps;
  os << "\n";
  os << std::left << std::setw(22) << "cases excluded";
  for (const BenchReport& r : reports)
    os << std::right << std::setw(16)
       << (r.spec.count - r.cases_counted);
  os << "\n";
  return os.str();
}

}  // namespace bench
}  // namespace lamred
