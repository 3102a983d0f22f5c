#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/generator.hpp"
#include "fbg/multigraph.hpp"
#include "fixtures.hpp"

using fbg::Edge;
using fbg::GuardError;
using fbg::Multigraph;
using fbg::VertexSet;
using fbg::VertexWeights;

TEST_CASE("VertexSet basics") {
  VertexSet s;
  CHECK(s.empty());
  CHECK(s.size() == 0);
  s.add(3);
  s.add(0);
  s.add(62);
  CHECK(s.size() == 3);
  CHECK(s.contains(0));
  CHECK(s.contains(3));
  CHECK(s.contains(62));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min() == 0);
  s.remove(0);
  CHECK(s.min() == 3);
  CHECK(s.to_vector() == std::vector<int>{3, 62});

  // Iteration is ascending.
  std::vector<int> seen;
  for (int v : VertexSet::of({5, 1, 9})) seen.push_back(v);
  CHECK(seen == std::vector<int>{1, 5, 9});

  CHECK(VertexSet::universe(3) == VertexSet::of({0, 1, 2}));
  CHECK(VertexSet::universe(0).empty());
  CHECK_THROWS_AS(VertexSet::of({64}), std::invalid_argument);
}

TEST_CASE("VertexSet algebra") {
  const VertexSet a = VertexSet::of({0, 1, 2});
  const VertexSet b = VertexSet::of({2, 3});
  CHECK((a | b) == VertexSet::of({0, 1, 2, 3}));
  CHECK((a & b) == VertexSet::of({2}));
  CHECK((a - b) == VertexSet::of({0, 1}));
  CHECK(VertexSet::of({2}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.disjoint(VertexSet::of({3, 4})));
  CHECK_FALSE(a.disjoint(b));
}

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Multigraph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Multigraph(64, {}), GuardError);
  CHECK_NOTHROW(Multigraph(63, {}));
  CHECK_NOTHROW(Multigraph(0, {}));
}

TEST_CASE("edges are normalized and keep their index") {
  const Multigraph g(3, {{2, 1}, {0, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{1, 2});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edges()[0].u == 1);
  CHECK(g.edges()[0].v == 2);
}

TEST_CASE("degrees and multiplicities") {
  const Multigraph g(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(2) == 1);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(1, 2) == 1);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.adjacency_bits(1) == (VertexSet::of({0, 2}).bits()));
  CHECK(g.vertices() == VertexSet::universe(3));
}

TEST_CASE("vertex weights") {
  const VertexWeights f({2, 0, 3});
  CHECK(f.size() == 3);
  CHECK(f.at(2) == 3);
  CHECK(f[1] == 0);
  CHECK(f.sum(VertexSet::of({0, 2})) == 5);
  CHECK(f.sum(VertexSet()) == 0);
  CHECK(f.total() == 5);
  CHECK(VertexWeights::constant(3, 1).total() == 3);
  CHECK_THROWS_AS(VertexWeights({-1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexWeights({fbg::kMaxWeight + 1}), GuardError);
  CHECK_NOTHROW(VertexWeights({fbg::kMaxWeight}));
  CHECK_THROWS_AS(f.sum(VertexSet::of({3})), std::invalid_argument);
}

TEST_CASE("edge counts between and within sets") {
  const Multigraph p3 = fbgtest::parallel3();
  CHECK(p3.edges_between(VertexSet::of({0}), VertexSet::of({1})) == 3);
  CHECK(p3.edges_between(VertexSet(), VertexSet::of({1})) == 0);

  const Multigraph tri = fbgtest::triangle();
  CHECK(tri.edges_between(VertexSet::of({0}), VertexSet::of({1, 2})) == 2);
  CHECK_THROWS_AS(tri.edges_between(VertexSet::of({0, 1}), VertexSet::of({1})),
                  std::invalid_argument);

  CHECK(tri.edges_within(tri.vertices()) == 3);
  CHECK(tri.edges_within(VertexSet::of({0})) == 0);
  CHECK(tri.edges_within(VertexSet()) == 0);

  const Multigraph pp(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
  CHECK(pp.edges_within(VertexSet::of({0, 1})) == 3);
}

TEST_CASE("degree sums in a vertex-deleted graph") {
  const Multigraph p3 = fbgtest::path(3);
  CHECK(p3.degree_sum_avoiding(VertexSet::of({1}), VertexSet()) == 2);
  CHECK(p3.degree_sum_avoiding(VertexSet::of({1}), VertexSet::of({0})) == 1);

  const Multigraph par = fbgtest::parallel3();
  CHECK(par.degree_sum_avoiding(VertexSet::of({1}), VertexSet::of({0})) == 0);
  CHECK_THROWS_AS(
      par.degree_sum_avoiding(VertexSet::of({0}), VertexSet::of({0})),
      std::invalid_argument);
}

TEST_CASE("connected components of an induced subgraph") {
  const Multigraph tri = fbgtest::triangle();
  auto comps = tri.components(tri.vertices());
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == tri.vertices());

  comps = fbgtest::edgeless(3).components(VertexSet::universe(3));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet::of({0}));
  CHECK(comps[1] == VertexSet::of({1}));
  CHECK(comps[2] == VertexSet::of({2}));

  const Multigraph p4 = fbgtest::path(4);
  comps = p4.components(VertexSet::of({0, 1, 3}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::of({3}));
  CHECK(p4.components(VertexSet()).empty());
}

TEST_CASE("graph equality") {
  CHECK(fbgtest::triangle() == fbgtest::triangle());
  CHECK_FALSE(fbgtest::triangle() == fbgtest::path(3));
}

TEST_CASE("random graphs satisfy counting identities") {
  fbg::SplitMix64 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const int m = n == 1 ? 0 : static_cast<int>(rng.below(13));
    const auto inst = fbg::generate_instance(n, m, 4, rng.next());
    const Multigraph& g = inst.graph;

    std::int64_t degree_sum = 0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * static_cast<std::int64_t>(g.edge_count()));

    // Components partition the ground set.
    VertexSet rest = g.vertices();
    VertexSet joined;
    for (const VertexSet& c : g.components(rest)) {
      CHECK_FALSE(c.empty());
      CHECK(c.disjoint(joined));
      joined = joined | c;
    }
    CHECK(joined == rest);

    // Draw a random disjoint pair (S, T) and check the degree-splitting
    // identity d_{G-S}(T) = 2 ||T|| + ||R, T||.
    VertexSet s, t;
    for (int v = 0; v < n; ++v) {
      const auto digit = rng.below(3);
      if (digit == 1) s.add(v);
      if (digit == 2) t.add(v);
    }
    const VertexSet r = g.vertices() - s - t;
    CHECK(g.degree_sum_avoiding(t, s) ==
          2 * g.edges_within(t) + g.edges_between(r, t));
    CHECK(g.edges_between(r, t) == g.edges_between(t, r));
  }
}
