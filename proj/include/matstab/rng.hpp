#ifndef MATSTAB_RNG_HPP
#define MATSTAB_RNG_HPP

#include <cstdint>

#include "matstab/rational.hpp"

namespace matstab {

/// splitmix64; deterministic sample streams for the falsifier grid and the
/// randomized property checks.
struct SplitMix64 {
  uint64_t state;

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// uniform in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }
  /// integer in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
  }
  /// rational n/d with |n| <= max_num and d in {1, 2}
  Rat small_rat(int max_num) {
    long long n = range(-max_num, max_num);
    long long d = range(1, 2);
    return Rat(n, d);
  }
  /// rational n/d with 1 <= n <= max_num and d in {1, 2}
  Rat positive_rat(int max_num) {
    long long n = range(1, max_num);
    long long d = range(1, 2);
    return Rat(n, d);
  }
};

}  // namespace matstab

#endif
