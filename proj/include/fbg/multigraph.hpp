#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fbg/errors.hpp"

namespace fbg {

/// Hard cap on vertex counts; vertex subsets are packed into a single 64-bit word.
inline constexpr int kMaxVertices = 63;

/// A subset of the vertices 0..n-1, packed into one machine word.
/// All set algebra is exact and allocation-free.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  /// The full set {0, ..., n-1}.
  static VertexSet universe(int n) {
    if (n < 0 || n > kMaxVertices + 1)
      throw std::invalid_argument("VertexSet::universe: bad size");
    return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  void add(int v) {
    check_index(v);
    bits_ |= std::uint64_t{1} << v;
  }

  void remove(int v) {
    check_index(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  bool contains(int v) const {
    return v >= 0 && v < 64 && (bits_ >> v) & 1;
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  /// Smallest member; the set must be non-empty.
  int min() const {
    if (empty()) throw std::logic_error("VertexSet::min on empty set");
    return std::countr_zero(bits_);
  }

  bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::uint64_t bits() const { return bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  /// Iterates members in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  static void check_index(int v) {
    if (v < 0 || v > kMaxVertices)
      throw std::invalid_argument("vertex id out of range for VertexSet");
  }

  std::uint64_t bits_ = 0;
};

/// An undirected edge; endpoints are normalized so that u < v.
struct Edge {
  int u;
  int v;

  bool operator==(const Edge&) const = default;
};

/// Loop-free multigraph on vertices 0..n-1. Parallel edges are represented by
/// repetition in the edge list; each edge keeps a stable index 0..m-1.
/// Immutable after construction, safe to share across threads.
class Multigraph {
 public:
  Multigraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  VertexSet vertices() const { return VertexSet::universe(n_); }

  /// Degree with multiplicity.
  std::int64_t degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }

  /// Number of parallel edges between u and v.
  std::int64_t multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return mult_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v)];
  }

  /// Simple-adjacency bitmask of v (multiplicity collapsed).
  std::uint64_t adjacency_bits(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  /// Number of edges with one endpoint in each of the disjoint sets a and b,
  /// counted with multiplicity.
  std::int64_t edges_between(VertexSet a, VertexSet b) const;

  /// Number of edges of the induced subgraph on a, with multiplicity.
  std::int64_t edges_within(VertexSet a) const;

  /// Total degree of the vertices in `targets` after deleting `removed`,
  /// i.e. the degree sum of `targets` in G - removed. The two sets must be
  /// disjoint.
  std::int64_t degree_sum_avoiding(VertexSet targets, VertexSet removed) const;

  /// Connected components of the induced subgraph on r, ordered by smallest
  /// vertex id. Their disjoint union is r.
  std::vector<VertexSet> components(VertexSet r) const;

  bool operator==(const Multigraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }
  void check_subset(VertexSet s) const {
    if (!s.subset_of(vertices()))
      throw std::invalid_argument("vertex set not contained in the graph");
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> degree_;
  std::vector<std::int64_t> mult_;  // n*n multiplicity matrix, row-major
  std::vector<std::uint64_t> adj_;
};

/// Guard on individual vertex weights; keeps every sum and deficiency within
/// comfortable 64-bit range (63 vertices * 1e12 << 2^63).
inline constexpr std::int64_t kMaxWeight = 1'000'000'000'000;

/// Nonnegative integer weight per vertex (the degree bound function).
class VertexWeights {
 public:
  explicit VertexWeights(std::vector<std::int64_t> values);

  static VertexWeights constant(int n, std::int64_t value) {
    return VertexWeights(std::vector<std::int64_t>(static_cast<std::size_t>(n), value));
  }

  int size() const { return static_cast<int>(values_.size()); }

  std::int64_t at(int v) const { return values_.at(static_cast<std::size_t>(v)); }
  std::int64_t operator[](int v) const { return at(v); }

  /// Sum of weights over a subset.
  std::int64_t sum(VertexSet s) const;

  /// Sum over all vertices.
  std::int64_t total() const { return total_; }

  const std::vector<std::int64_t>& values() const { return values_; }

  bool operator==(const VertexWeights& o) const { return values_ == o.values_; }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t total_;
};

/// Throws if the weight vector does not match the graph's vertex count.
void require_compatible(const Multigraph& g, const VertexWeights& f);

/// A multigraph together with its weight function: the unit the file format,
/// the generator and the CLI commands pass around.
struct Instance {
  Multigraph graph;
  VertexWeights weights;
};

}  // namespace fbg
