#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/formula.hpp"

namespace fbg {

/// Edge-subset enumeration guard shared by the brute-force oracles.
inline constexpr int kBruteForceEdgeLimit = 22;

/// Simple undirected graph: no parallel edges, no loops. Neighbor lists are
/// sorted ascending, which fixes the scan order of every algorithm below.
/// Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }

  bool adjacent(int u, int v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  int n_;
  std::int64_t edge_count_;
  std::vector<std::vector<int>> adjacency_;
};

/// Matching as a mate map; kUnmatched marks exposed vertices.
struct Matching {
  static constexpr int kUnmatched = -1;

  std::vector<int> mate;

  int size() const {
    int matched = 0;
    for (int m : mate)
      if (m != kUnmatched) ++matched;
    return matched / 2;
  }

  bool covers(int v) const { return mate.at(static_cast<std::size_t>(v)) != kUnmatched; }

  /// mate is an involution and every matched pair is an edge of g.
  bool valid_for(const SimpleGraph& g) const;
};

/// Maximum cardinality matching via Edmonds' blossom algorithm with explicit
/// blossom contraction. Deterministic: roots are tried in ascending id and
/// augmenting paths are taken first-found under the sorted adjacency order.
Matching maximum_matching(const SimpleGraph& g);

/// Oracle: maximum matching size by enumerating all edge subsets.
/// Requires |E| <= kBruteForceEdgeLimit.
std::int64_t matching_size_brute(const SimpleGraph& g);

/// Classical Tutte-Berge value (n - max_S [odd_components(G-S) - |S|]) / 2,
/// evaluated by enumerating all 2^n vertex subsets. Requires n <= limit.
std::int64_t tutte_berge_value(const SimpleGraph& g, int limit = kDefaultExhaustiveLimit);

}  // namespace fbg
