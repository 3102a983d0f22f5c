#pragma once

#include <vector>

#include "fbg/multigraph.hpp"

// Small graphs shared across test files.
namespace fbgtest {

inline fbg::Multigraph triangle() {
  return fbg::Multigraph(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline fbg::Multigraph k4() {
  return fbg::Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// K_{1,3} with the center at vertex 0.
inline fbg::Multigraph star3() {
  return fbg::Multigraph(4, {{0, 1}, {0, 2}, {0, 3}});
}

// Two vertices joined by three parallel edges.
inline fbg::Multigraph parallel3() {
  return fbg::Multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

// Path 0-1-2-...-(k-1).
inline fbg::Multigraph path(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return fbg::Multigraph(k, edges);
}

inline fbg::Multigraph edgeless(int k) { return fbg::Multigraph(k, {}); }

inline fbg::VertexWeights ones(int k) {
  return fbg::VertexWeights::constant(k, 1);
}

inline fbg::VertexWeights twos(int k) {
  return fbg::VertexWeights::constant(k, 2);
}

}  // namespace fbgtest
