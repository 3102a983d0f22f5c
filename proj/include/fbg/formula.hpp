#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fbg/multigraph.hpp"

namespace fbg {

/// Default ceiling for the 3^n exhaustive enumerations. 3^16 is about 43M
/// pairs, the largest search that is still comfortable on a desktop.
inline constexpr int kDefaultExhaustiveLimit = 16;

/// Hard ceiling the CLI accepts for --limit.
inline constexpr int kMaxExhaustiveLimit = 20;

/// An ordered pair (S, T) of disjoint vertex subsets. The remainder
/// R = V - S - T is derived, never stored.
struct PartitionPair {
  VertexSet s;
  VertexSet t;

  PartitionPair() = default;  // the empty pair

  PartitionPair(VertexSet s_in, VertexSet t_in) : s(s_in), t(t_in) {
    if (!s.disjoint(t)) throw std::invalid_argument("S and T must be disjoint");
  }

  bool operator==(const PartitionPair&) const = default;
};

/// Base-3 encoding of a pair: digit 0 = R, 1 = S, 2 = T, vertex 0 least
/// significant. Enumeration and tie-breaking are defined over this code.
std::uint64_t pair_code(const PartitionPair& pair, int n);
PartitionPair pair_from_code(std::uint64_t code, int n);

/// 3^n, guarded against overflow for n <= kMaxExhaustiveLimit + a margin.
std::uint64_t pair_count(int n);

/// True iff f(Q) + ||Q,T|| is odd, i.e. the component with vertex set Q is a
/// bad component of G - S - T for a pair whose T-side is t.
bool is_bad_component(const Multigraph& g, const VertexWeights& f, VertexSet q, VertexSet t);

/// The bad components of G - S - T, ordered by smallest vertex id.
std::vector<VertexSet> bad_components(const Multigraph& g, const VertexWeights& f,
                                      const PartitionPair& pair);

/// Number of bad components of G - S - T.
std::int64_t q_count(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair);

/// def(S,T) = f(T) - f(S) - d_{G-S}(T) + q(S,T). May be negative.
std::int64_t deficiency(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair);

/// f(S) + ||T|| + sum over components Q of G-S-T of floor((f(Q)+||Q,T||)/2).
/// Always equals (f(V) - deficiency(S,T)) / 2 exactly.
std::int64_t schrijver_bound(const Multigraph& g, const VertexWeights& f,
                             const PartitionPair& pair);

/// True iff deficiency(S,T) and f(V) have the same parity. Holds for every
/// pair; exposed so harnesses can assert it directly.
bool parity_check(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair);

/// True iff def(empty, empty) equals the number of connected components of G
/// with odd weight sum. Holds on every instance.
bool deficiency_empty_pair_identity(const Multigraph& g, const VertexWeights& f);

/// Optimal pair together with its deficiency value and bad components.
struct DeficiencyCertificate {
  PartitionPair pair;
  std::int64_t gamma = 0;
  std::vector<VertexSet> bad_components;
  std::int64_t f_total = 0;
};

/// Maximizes def(S,T) over all 3^n disjoint ordered pairs and returns the
/// lexicographically first maximizer under the base-3 pair code. Requires
/// n <= limit; the enumeration may run in parallel internally but the result
/// is identical to the sequential scan.
DeficiencyCertificate max_deficiency(const Multigraph& g, const VertexWeights& f,
                                     int limit = kDefaultExhaustiveLimit);

struct FFactorResult {
  bool exists;
  /// A pair with deficiency > 0 when no f-factor exists and the exhaustive
  /// path ran; absent on the large-instance solver path.
  std::optional<PartitionPair> witness;
};

/// Whether G has a spanning subgraph with degree exactly f(v) at every vertex.
/// Uses the exhaustive certificate for n <= limit and falls back to the
/// solver identity h(G;f) = f(V) for larger instances.
FFactorResult has_f_factor(const Multigraph& g, const VertexWeights& f,
                           int limit = kDefaultExhaustiveLimit);

namespace detail {
/// Unchecked deficiency over raw bitmasks; hot path for the enumerations.
std::int64_t deficiency_bits(const Multigraph& g, const VertexWeights& f, std::uint64_t s_bits,
                             std::uint64_t t_bits);
std::int64_t schrijver_bound_bits(const Multigraph& g, const VertexWeights& f,
                                  std::uint64_t s_bits, std::uint64_t t_bits);
}  // namespace detail

}  // namespace fbg
