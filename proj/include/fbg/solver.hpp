#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbg/formula.hpp"
#include "fbg/matcher.hpp"
#include "fbg/multigraph.hpp"

namespace fbg {

/// Materialization caps. The gadget expansion and the w-augmentation build
/// explicit graphs whose size is data-dependent; these caps turn would-be
/// memory exhaustion into a GuardError with a readable message.
inline constexpr std::int64_t kMaxExpandedVertices = 2'000'000;
inline constexpr std::int64_t kMaxExpandedEdges = 8'000'000;

/// Spanning subgraph H of a host multigraph, stored as the subset of the
/// host's edge indices plus the resulting degree vector d_H.
struct Subgraph {
  std::vector<int> edge_indices;     // strictly ascending indices into the host edge list
  std::vector<std::int64_t> degree;  // d_H(v) for every vertex of the host

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edge_indices.size()); }
  std::int64_t degree_sum() const { return 2 * edge_count(); }
};

/// True iff the indices are valid, strictly ascending, and the stored degree
/// vector matches what the selected edges induce.
bool subgraph_consistent(const Multigraph& g, const Subgraph& h);

/// True iff d_H(v) <= f(v) for every vertex.
bool subgraph_bounded(const Subgraph& h, const VertexWeights& f);

/// Bookkeeping for the vertex-expansion gadget. Expanded ids are laid out as
/// all vertex copies first (grouped by original vertex, ascending), then one
/// (e_u, e_v) gadget pair per original edge in edge-index order.
struct GadgetMap {
  std::vector<std::vector<int>> vertex_copies;      // [v] -> ids of the f(v) copies
  std::vector<std::pair<int, int>> edge_gadget;     // [e] -> (e_u, e_v); e_u serves the smaller endpoint
  int expanded_vertex_count = 0;
};

/// Builds the expanded simple graph: f(v) copies per vertex; per edge {u,v}
/// two gadget vertices e_u, e_v, the edge e_u-e_v, plus e_u joined to every
/// copy of u and e_v to every copy of v. A maximum matching of the result has
/// size m + |maximum f-bounded subgraph|.
std::pair<SimpleGraph, GadgetMap> expand_gadget(const Multigraph& g, const VertexWeights& f);

/// Oracle: maximum f-bounded subgraph by enumerating all 2^m edge subsets.
/// Requires m <= kBruteForceEdgeLimit. Ties break to the smallest edge-index
/// bitmask.
Subgraph brute_force_max_fbounded(const Multigraph& g, const VertexWeights& f);

/// Maximum f-bounded subgraph via the gadget reduction: run maximum_matching
/// on the expanded graph, normalize it so every gadget pair is covered, and
/// select edge e iff both of its gadget vertices are matched to vertex
/// copies. Weights are clamped to min(f(v), deg(v)) before expanding, which
/// never changes the optimum and keeps the expansion within 4m vertices.
Subgraph solve_max_fbounded(const Multigraph& g, const VertexWeights& f);

/// Maximum degree sum of an f-bounded subgraph, i.e. twice the edge count of
/// solve_max_fbounded.
std::int64_t h_value(const Multigraph& g, const VertexWeights& f);

/// G plus one extra vertex w joined to every original vertex by gamma
/// parallel edges, with f'(w) = gamma and f' = f elsewhere.
struct AugmentedInstance {
  Multigraph g_prime;
  VertexWeights f_prime;
  std::int64_t gamma;
  int w_id;  // always the original vertex count
};

/// Builds the augmented instance. Requires gamma >= 1; gamma = 0 needs no
/// augmentation (bounded-subgraph optimality is then plain factor existence).
AugmentedInstance augment_with_w(const Multigraph& g, const VertexWeights& f, std::int64_t gamma);

/// One named pass/fail entry of a verification run. detail is empty for
/// passing checks and carries the mismatching numbers otherwise.
struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of the full min-max check battery on one instance. Checks that do
/// not apply (oracle and gadget checks when m is over the brute-force limit,
/// the augmentation check when gamma = 0) are simply absent.
struct VerificationReport {
  int n = 0;
  std::int64_t m = 0;
  std::int64_t f_total = 0;
  std::int64_t h = 0;             // degree sum attained by the solver
  std::int64_t gamma = 0;         // maximum deficiency
  std::int64_t solver_edges = 0;  // |H| from the gadget reduction
  std::optional<std::int64_t> brute_edges;  // oracle |H|, when m allows it
  std::int64_t min_schrijver = 0;           // min over all pairs of the bound
  DeficiencyCertificate certificate;
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const VerificationCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Runs every duality, parity, identity, feasibility, factor-bridge and
/// augmentation check on one instance, with the solver side and the
/// exhaustive certificate side computed independently. Requires n <= limit
/// for the certificate side.
VerificationReport verify_minmax(const Multigraph& g, const VertexWeights& f,
                                 int limit = kDefaultExhaustiveLimit);

}  // namespace fbg
