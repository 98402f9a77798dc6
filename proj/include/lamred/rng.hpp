#ifndef LAMRED_RNG_HPP
#define LAMRED_RNG_HPP

#include <cstdint>

namespace lamred {

// splitmix64: the deterministic PRNG used for every seeded corpus in this
// project. The algorithm identifier "splitmix64" is recorded in benchmark
// reports so corpora are replayable elsewhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive. Modulo bias is irrelevant for the
  // corpus sizes used here and keeps the mapping trivially portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline const char* rng_algorithm_id() { return "splitmix64"; }

}  // namespace lamred

#endif
