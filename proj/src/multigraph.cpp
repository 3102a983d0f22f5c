#include "fbg/multigraph.hpp"

#include <algorithm>
#include <string>

namespace fbg {

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw GuardError("vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));

  edges_.reserve(edges.size());
  degree_.assign(static_cast<std::size_t>(n), 0);
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  adj_.assign(static_cast<std::size_t>(n), 0);

  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loops are not allowed");
    const int u = std::min(a, b);
    const int v = std::max(a, b);
    edges_.push_back(Edge{u, v});
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++mult_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    ++mult_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)];
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
}

std::int64_t Multigraph::edges_between(VertexSet a, VertexSet b) const {
  check_subset(a);
  check_subset(b);
  if (!a.disjoint(b)) throw std::invalid_argument("edges_between requires disjoint sets");
  std::int64_t count = 0;
  for (int u : a)
    for (int v : b) count += multiplicity(u, v);
  return count;
}

std::int64_t Multigraph::edges_within(VertexSet a) const {
  check_subset(a);
  std::int64_t count = 0;
  for (int u : a)
    for (int v : a)
      if (u < v) count += multiplicity(u, v);
  return count;
}

std::int64_t Multigraph::degree_sum_avoiding(VertexSet targets, VertexSet removed) const {
  check_subset(targets);
  check_subset(removed);
  if (!targets.disjoint(removed))
    throw std::invalid_argument("degree_sum_avoiding requires disjoint sets");
  std::int64_t sum = 0;
  for (int v : targets) {
    sum += degree(v);
    for (int s : removed) sum -= multiplicity(v, s);
  }
  return sum;
}

std::vector<VertexSet> Multigraph::components(VertexSet r) const {
  check_subset(r);
  std::vector<VertexSet> out;
  std::uint64_t rest = r.bits();
  while (rest) {
    const int v = std::countr_zero(rest);
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= r.bits() & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(VertexSet::from_bits(comp));
    rest &= ~comp;
  }
  return out;  // ascending min-id order: rest is consumed lowest bit first
}

VertexWeights::VertexWeights(std::vector<std::int64_t> values) : values_(std::move(values)) {
  total_ = 0;
  for (std::int64_t w : values_) {
    if (w < 0) throw std::invalid_argument("vertex weights must be nonnegative");
    if (w > kMaxWeight) throw GuardError("vertex weight exceeds the supported maximum");
    total_ += w;
  }
}

std::int64_t VertexWeights::sum(VertexSet s) const {
  if (!s.subset_of(VertexSet::universe(size())))
    throw std::invalid_argument("vertex set not covered by the weight vector");
  std::int64_t acc = 0;
  for (int v : s) acc += at(v);
  return acc;
}

void require_compatible(const Multigraph& g, const VertexWeights& f) {
  if (f.size() != g.vertex_count())
    throw std::invalid_argument("weight vector length does not match vertex count");
}

}  // namespace fbg
