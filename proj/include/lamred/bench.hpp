#ifndef LAMRED_BENCH_HPP
#define LAMRED_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lamred/meter.hpp"
#include "lamred/strategies.hpp"
#include "lamred/term.hpp"

namespace lamred {
namespace bench {

// Combinator and Church-numeral builders; every call builds fresh nodes.
TermNode* comb_s(TermArena& arena);
TermNode* comb_k(TermArena& arena);
TermNode* comb_i(TermArena& arena);
TermNode* church(int n, TermArena& arena);
TermNode* church_plus(TermArena& arena);
TermNode* church_mult(TermArena& arena);

// Reads a normal-form Church numeral back as an integer; -1 when the term is
// not of that shape. Serves as the value check independent of any reducer.
int church_value(const TermNode* t);

// Corpus description; replayable from these fields alone. For the church
// suite `size` bounds the largest sum operand (product operands are capped so
// the product stays within `size`).
struct SuiteSpec {
  std::string suite;  // "ski" | "church"
  std::uint64_t seed = 1;
  int count = 500;
  int size = 12;
  long long fuel = kDefaultFuel;
};

enum class Outcome : std::uint8_t {
  Normalized,
  NonTerminating,
  ResourceLimit,
  Mismatch,  // normalized but differed from the case's expected value
};

const char* outcome_name(Outcome o);

struct CaseRun {
  std::string name;
  Outcome outcome;
  Meter meter;  // allocations of this case's normalization alone
};

struct StrategyRun {
  Strategy strategy;
  std::vector<CaseRun> cases;
};

// Deterministic per-case seeds; case i of a suite is always built from
// case_seed(spec.seed, i).
std::uint64_t case_seed(std::uint64_t suite_seed, int index);

// Builds case `index` of the suite into `arena`; `expected` is set for church
// cases (the arithmetic result) and null for SKI cases.
struct BuiltCase {
  std::string name;
  TermNode* term;
  TermNode* expected;
};
BuiltCase build_case(const SuiteSpec& spec, int index, TermArena& arena);

// Runs every case of the suite under one strategy: the case term is built
// fresh, the meter is reset after construction, and normalize_full runs under
// the spec's fuel. Failures are recorded per case, never thrown.
StrategyRun run_suite(const SuiteSpec& spec, Strategy strategy);

// Aggregate report over the cases of one strategy run, excluding the case
// indices in `excluded` (used to drop non-normalizing cases symmetrically
// across strategies).
struct BenchReport {
  SuiteSpec spec;
  std::string strategy;  // "implicit" | "explicit" | "combined"
  ByteModel byte_model;
  Meter totals;
  int cases_counted = 0;
  std::vector<std::string> nonterminating_cases;

  std::string to_json() const;
  std::string to_text() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

BenchReport aggregate(const SuiteSpec& spec, const StrategyRun& run,
                      const std::vector<bool>& excluded,
                      const ByteModel& model);

// Runs all three strategies over the same suite, excluding from every
// aggregate any case that failed to normalize under at least one strategy.
std::vector<BenchReport> compare_suites(const SuiteSpec& spec,
                                        const ByteModel& model);

// Single-strategy entry: exclusion set is the strategy's own failures.
BenchReport run_benchmark(const SuiteSpec& spec, Strategy strategy,
                          const ByteModel& model);

std::string render_comparison_table(const std::vector<BenchReport>& reports);

}  // namespace bench
}  // namespace lamred

#endif
