#include "fbg/generator.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fbg {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
  const std::uint64_t min_accepted = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= min_accepted) return r % bound;
  }
}

Instance generate_instance(int n, int m, std::int64_t fmax, std::uint64_t seed) {
  if (n < 1) throw GuardError("generator requires n >= 1");
  if (n > kMaxVertices)
    throw GuardError("generator supports at most " + std::to_string(kMaxVertices) + " vertices");
  if (m < 0) throw GuardError("generator requires m >= 0");
  if (fmax < 0 || fmax > kMaxWeight)
    throw GuardError("fmax must be between 0 and " + std::to_string(kMaxWeight));
  const std::int64_t npairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > 0 && npairs == 0)
    throw GuardError("cannot place edges: one vertex admits no non-loop pairs");

  SplitMix64 rng(seed);

  std::vector<std::int64_t> weights(static_cast<std::size_t>(n));
  for (auto& w : weights)
    w = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(fmax) + 1));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    // Decode a uniform pair index into (u, v), u < v, pairs ordered
    // (0,1), (0,2), ..., (0,n-1), (1,2), ...
    std::uint64_t k = rng.below(static_cast<std::uint64_t>(npairs));
    int u = 0;
    while (k >= static_cast<std::uint64_t>(n - 1 - u)) {
      k -= static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    edges.emplace_back(u, u + 1 + static_cast<int>(k));
  }

  return Instance{Multigraph(n, edges), VertexWeights(std::move(weights))};
}

}  // namespace fbg
