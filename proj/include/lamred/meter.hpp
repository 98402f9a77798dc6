#ifndef LAMRED_METER_HPP
#define LAMRED_METER_HPP

#include <array>
#include <cstdint>
#include <string>

namespace lamred {

enum class Kind : std::uint8_t;

constexpr int kTermKindCount = 7;

// Per-kind word sizes used to derive byte totals from node counts. The model
// is declared up front and echoed in every report header so the numbers stay
// interpretable; it can be overridden with LAMRED_BYTE_MODEL
// ("word=8,App=3,Susp=5,...").
struct ByteModel {
  int word = 8;
  // Indexed by Kind: Const, FreeVar, BoundIdx, App, Lam, Susp, Indirection.
  std::array<int, kTermKindCount> term_words = {2, 2, 2, 3, 2, 5, 2};
  int dummy_words = 2;
  int binding_words = 3;

  static ByteModel defaults() { return ByteModel{}; }
  // defaults() adjusted by the LAMRED_BYTE_MODEL environment variable.
  static ByteModel from_env();
  // Parses "kind=words" pairs; throws Error on unknown keys or bad numbers.
  static ByteModel parse(const std::string& spec);

  std::string describe() const;
};

// Allocation and rule-application counters for one engine instance. Counts
// only constructions that go through a TermArena; in-place rewrites are free.
struct Meter {
  std::array<long long, kTermKindCount> term_counts{};
  long long dummy_count = 0;
  long long binding_count = 0;
  long long beta_steps = 0;
  long long reading_steps = 0;

  void record_term(Kind k);
  void record_dummy() { ++dummy_count; }
  void record_binding() { ++binding_count; }
  void reset();

  long long total_nodes() const;
  long long env_items() const { return dummy_count + binding_count; }
  long long total_bytes(const ByteModel& model) const;
};

}  // namespace lamred

#endif
