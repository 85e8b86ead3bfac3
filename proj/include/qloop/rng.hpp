#pragma once

// Small deterministic 64-bit generator (splitmix64) so sampled test elements
// are reproducible from a single recorded seed.

#include <cstdint>

namespace qloop {

struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform over [lo, hi], both ends included.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace qloop
