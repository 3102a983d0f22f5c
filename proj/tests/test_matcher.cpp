#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/generator.hpp"
#include "fbg/matcher.hpp"

using fbg::GuardError;
using fbg::Matching;
using fbg::SimpleGraph;

namespace {

// Exhaustive alternating-path search: enumerates every simple alternating
// path leaving an exposed vertex, so unlike a marking-based BFS it cannot be
// fooled by odd cycles. Exponential, but the test graphs are tiny.
bool augmenting_from(const SimpleGraph& g, const std::vector<int>& mate,
                     std::vector<char>& used, int v) {
  used[v] = 1;
  for (int w : g.neighbors(v)) {
    if (used[w] || mate[v] == w) continue;
    if (mate[w] == Matching::kUnmatched) {
      used[v] = 0;
      return true;
    }
    const int x = mate[w];
    if (used[x]) continue;
    used[w] = 1;
    if (augmenting_from(g, mate, used, x)) {
      used[v] = 0;
      used[w] = 0;
      return true;
    }
    used[w] = 0;
  }
  used[v] = 0;
  return false;
}

bool has_augmenting_path(const SimpleGraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (m.mate[v] == Matching::kUnmatched && augmenting_from(g, m.mate, used, v))
      return true;
  }
  return false;
}

SimpleGraph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return SimpleGraph(10, edges);
}

}  // namespace

TEST_CASE("simple graph construction") {
  const SimpleGraph g(4, {{2, 0}, {0, 1}, {1, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(2, 3));
  const auto list = g.edge_list();
  REQUIRE(list.size() == 3);
  CHECK(list[0] == std::pair<int, int>{0, 1});
  CHECK(list[1] == std::pair<int, int>{0, 2});
  CHECK(list[2] == std::pair<int, int>{1, 3});

  CHECK_THROWS_AS(SimpleGraph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("matching bookkeeping") {
  const SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Matching m;
  m.mate = {1, 0, Matching::kUnmatched, Matching::kUnmatched};
  CHECK(m.size() == 1);
  CHECK(m.covers(0));
  CHECK_FALSE(m.covers(3));
  CHECK(m.valid_for(p4));

  m.mate = {2, Matching::kUnmatched, 0, Matching::kUnmatched};
  CHECK_FALSE(m.valid_for(p4));  // 0-2 is not an edge

  m.mate = {1, 0, 3, Matching::kUnmatched};
  CHECK_FALSE(m.valid_for(p4));  // not an involution
}

TEST_CASE("maximum matching on fixed graphs") {
  const SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  const Matching mp = fbg::maximum_matching(p4);
  CHECK(mp.mate == std::vector<int>{1, 0, 3, 2});
  CHECK(mp.size() == 2);

  const SimpleGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  const Matching mt = fbg::maximum_matching(tri);
  CHECK(mt.mate == std::vector<int>{1, 0, Matching::kUnmatched});

  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const Matching ms = fbg::maximum_matching(star);
  CHECK(ms.mate == std::vector<int>{1, 0, Matching::kUnmatched,
                                    Matching::kUnmatched});

  CHECK(fbg::maximum_matching(SimpleGraph(1, {})).size() == 0);
  CHECK(fbg::maximum_matching(SimpleGraph(0, {})).size() == 0);
  CHECK(fbg::maximum_matching(petersen()).size() == 5);
}

TEST_CASE("blossom handling") {
  // Two triangles joined by a bridge: perfect matching needs contraction.
  const SimpleGraph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5},
                          {3, 5}});
  const Matching m = fbg::maximum_matching(g);
  CHECK(m.size() == 3);
  CHECK(m.valid_for(g));

  // Odd cycle C5 plus a pendant vertex forces an augmentation through the
  // blossom.
  const SimpleGraph c5p(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}});
  const Matching m5 = fbg::maximum_matching(c5p);
  CHECK(m5.size() == 3);
  CHECK(m5.valid_for(c5p));
}

TEST_CASE("brute force matching size") {
  CHECK(fbg::matching_size_brute(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}})) ==
        2);
  CHECK(fbg::matching_size_brute(SimpleGraph(
            4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 2);
  CHECK(fbg::matching_size_brute(SimpleGraph(3, {})) == 0);

  std::vector<std::pair<int, int>> many;
  for (int u = 0; u < 8 && static_cast<int>(many.size()) < 23; ++u)
    for (int v = u + 1; v < 8 && static_cast<int>(many.size()) < 23; ++v)
      many.emplace_back(u, v);
  CHECK_THROWS_AS(fbg::matching_size_brute(SimpleGraph(8, many)), GuardError);
}

TEST_CASE("classical Tutte-Berge values") {
  CHECK(fbg::tutte_berge_value(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
  CHECK(fbg::tutte_berge_value(SimpleGraph(
            4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 2);
  CHECK(fbg::tutte_berge_value(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
  CHECK(fbg::tutte_berge_value(SimpleGraph(1, {})) == 0);

  CHECK_THROWS_AS(fbg::tutte_berge_value(SimpleGraph(17, {}), 16), GuardError);
  CHECK_THROWS_AS(fbg::tutte_berge_value(SimpleGraph(3, {}), 21), GuardError);
}

TEST_CASE("random graphs: blossom agrees with oracles") {
  fbg::SplitMix64 rng(31337);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(2) == 0) edges.emplace_back(u, v);
    if (static_cast<int>(edges.size()) > fbg::kBruteForceEdgeLimit) {
      --iter;
      continue;
    }
    const SimpleGraph g(n, edges);
    const Matching m = fbg::maximum_matching(g);
    REQUIRE(m.valid_for(g));
    const std::int64_t brute = fbg::matching_size_brute(g);
    CHECK(m.size() == brute);
    CHECK(brute == fbg::tutte_berge_value(g));
    CHECK_FALSE(has_augmenting_path(g, m));

    // Deterministic: a second run reproduces the same mate array.
    CHECK(fbg::maximum_matching(g).mate == m.mate);
  }
}
