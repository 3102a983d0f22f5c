#pragma once

#include <cstdint>

#include "fbg/multigraph.hpp"

namespace fbg {

/// splitmix64. Chosen because the whole state is one word, the output
/// sequence is fixed by the published constants, and it behaves identically
/// on every platform, which is what the replay contract needs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) by rejection sampling; bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Random instance, fully determined by (n, m, fmax, seed): first f(v)
/// uniform in [0, fmax] for v = 0..n-1, then m edges drawn uniformly with
/// replacement from the n(n-1)/2 non-loop pairs.
Instance generate_instance(int n, int m, std::int64_t fmax, std::uint64_t seed);

}  // namespace fbg
