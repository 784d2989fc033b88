#pragma once

#include <cstdint>
#include <random>

#include "casc/rational.hpp"

namespace casc {

// Deterministic across platforms: mt19937_64 output is fully specified and
// no std distribution (whose mapping is implementation-defined) is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long irange(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long nonzero(long bound) {  // in [-bound, bound] \ {0}
    long v = irange(1, 2 * bound);
    return v <= bound ? v : bound - v;
  }

  Rat rat_small(long num_bound = 5, long den_bound = 3) {
    return ratio(irange(-num_bound, num_bound), irange(1, den_bound));
  }

  Rat rat_nonzero(long num_bound = 5, long den_bound = 3) {
    return ratio(nonzero(num_bound), irange(1, den_bound));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace casc
