#include "fbg/matcher.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace fbg {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), edge_count_(static_cast<std::int64_t>(edges.size())) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a SimpleGraph");
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("parallel edges are not allowed in a SimpleGraph");
  }
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Matching::valid_for(const SimpleGraph& g) const {
  if (static_cast<int>(mate.size()) != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int m = mate[static_cast<std::size_t>(v)];
    if (m == kUnmatched) continue;
    if (m < 0 || m >= g.vertex_count()) return false;
    if (mate[static_cast<std::size_t>(m)] != v) return false;
    if (!g.adjacent(v, m)) return false;
  }
  return true;
}

namespace {

/// One phase of Edmonds' algorithm: grow an alternating tree from a single
/// exposed root, contracting blossoms as they appear. base_[v] names the
/// representative of the contracted blossom containing v.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const SimpleGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        mate_(static_cast<std::size_t>(n_), Matching::kUnmatched),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        in_tree_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)),
        lca_mark_(static_cast<std::size_t>(n_)) {}

  Matching run() {
    greedy_init();
    for (int v = 0; v < n_; ++v)
      if (mate_[static_cast<std::size_t>(v)] == Matching::kUnmatched) grow_tree_from(v);
    return Matching{std::move(mate_)};
  }

 private:
  void greedy_init() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[static_cast<std::size_t>(v)] != Matching::kUnmatched) continue;
      for (int w : g_.neighbors(v)) {
        if (mate_[static_cast<std::size_t>(w)] == Matching::kUnmatched) {
          mate_[static_cast<std::size_t>(v)] = w;
          mate_[static_cast<std::size_t>(w)] = v;
          break;
        }
      }
    }
  }

  int mate(int v) const { return mate_[static_cast<std::size_t>(v)]; }

  /// First common blossom base on the tree paths from a and b to the root.
  int common_base(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    int v = a;
    while (true) {
      v = base_[static_cast<std::size_t>(v)];
      lca_mark_[static_cast<std::size_t>(v)] = true;
      if (mate(v) == Matching::kUnmatched) break;  // reached the root
      v = parent_[static_cast<std::size_t>(mate(v))];
    }
    v = b;
    while (true) {
      v = base_[static_cast<std::size_t>(v)];
      if (lca_mark_[static_cast<std::size_t>(v)]) return v;
      v = parent_[static_cast<std::size_t>(mate(v))];
    }
  }

  /// Marks the bases on the tree path from v down to the blossom base `stop`
  /// and rewires parent pointers across the bridge for later augmentation.
  void mark_blossom_path(int v, int stop, int bridge_peer) {
    while (base_[static_cast<std::size_t>(v)] != stop) {
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate(v))])] = true;
      parent_[static_cast<std::size_t>(v)] = bridge_peer;
      bridge_peer = mate(v);
      v = parent_[static_cast<std::size_t>(mate(v))];
    }
  }

  void contract_blossom(int v, int w, std::deque<int>& queue) {
    const int stop = common_base(v, w);
    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
    mark_blossom_path(v, stop, w);
    mark_blossom_path(w, stop, v);
    for (int u = 0; u < n_; ++u) {
      if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(u)])]) {
        base_[static_cast<std::size_t>(u)] = stop;
        if (!in_tree_[static_cast<std::size_t>(u)]) {
          in_tree_[static_cast<std::size_t>(u)] = true;
          queue.push_back(u);  // absorbed odd vertices become scannable
        }
      }
    }
  }

  /// Flip matched/unmatched edges along the alternating path ending at the
  /// exposed vertex v; parent pointers encode the path through blossoms.
  void augment_from(int v) {
    while (v != Matching::kUnmatched) {
      const int pv = parent_[static_cast<std::size_t>(v)];
      const int next = mate(pv);
      mate_[static_cast<std::size_t>(v)] = pv;
      mate_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  bool grow_tree_from(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), Matching::kUnmatched);
    std::iota(base_.begin(), base_.end(), 0);
    in_tree_[static_cast<std::size_t>(root)] = true;

    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(w)] ||
            mate(v) == w)
          continue;
        if (w == root ||
            (mate(w) != Matching::kUnmatched &&
             parent_[static_cast<std::size_t>(mate(w))] != Matching::kUnmatched)) {
          // w is an even vertex of the same tree: odd cycle, contract it
          contract_blossom(v, w, queue);
        } else if (parent_[static_cast<std::size_t>(w)] == Matching::kUnmatched) {
          parent_[static_cast<std::size_t>(w)] = v;
          if (mate(w) == Matching::kUnmatched) {
            augment_from(w);
            return true;
          }
          // w becomes odd; its mate joins the tree as an even vertex
          in_tree_[static_cast<std::size_t>(mate(w))] = true;
          queue.push_back(mate(w));
        }
      }
    }
    return false;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> lca_mark_;
};

}  // namespace

Matching maximum_matching(const SimpleGraph& g) { return BlossomMatcher(g).run(); }

std::int64_t matching_size_brute(const SimpleGraph& g) {
  const auto edges = g.edge_list();
  const int m = static_cast<int>(edges.size());
  if (m > kBruteForceEdgeLimit)
    throw GuardError("matching_size_brute: " + std::to_string(m) + " edges exceed the limit of " +
                     std::to_string(kBruteForceEdgeLimit));
  std::int64_t best = 0;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool disjoint = true;
    std::uint32_t rest = mask;
    while (rest) {
      const auto& [u, v] = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      rest &= rest - 1;
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) {
        disjoint = false;
        break;
      }
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    }
    std::fill(used.begin(), used.end(), 0);
    if (disjoint) best = size;
  }
  return best;
}

std::int64_t tutte_berge_value(const SimpleGraph& g, int limit) {
  const int n = g.vertex_count();
  if (limit < 0 || limit > kMaxExhaustiveLimit)
    throw GuardError("exhaustive limit must be between 0 and " +
                     std::to_string(kMaxExhaustiveLimit));
  if (n > limit)
    throw GuardError("instance too large for Tutte-Berge enumeration: n=" + std::to_string(n) +
                     ", limit=" + std::to_string(limit));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;

  std::int64_t worst = std::numeric_limits<std::int64_t>::min();
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  for (std::uint64_t s = 0;; ++s) {
    std::int64_t odd = 0;
    std::uint64_t rest = full & ~s;
    while (rest) {
      std::uint64_t comp = std::uint64_t{1} << std::countr_zero(rest);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t fbits = frontier; fbits; fbits &= fbits - 1)
          next |= adj[static_cast<std::size_t>(std::countr_zero(fbits))];
        next &= ~s & ~comp & full;
        comp |= next;
        frontier = next;
      }
      if (std::popcount(comp) % 2 != 0) ++odd;
      rest &= ~comp;
    }
    worst = std::max(worst, odd - std::popcount(s));
    if (s == full) break;
  }

  // odd(G-S) - |S| always has the parity of n, so this division is exact
  return (n - worst) / 2;
}

}  // namespace fbg
