#include "fbg/solver.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace fbg {

bool subgraph_consistent(const Multigraph& g, const Subgraph& h) {
  if (static_cast<int>(h.degree.size()) != g.vertex_count()) return false;
  std::vector<std::int64_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  int prev = -1;
  for (int idx : h.edge_indices) {
    if (idx <= prev || idx >= g.edge_count()) return false;
    prev = idx;
    const Edge e = g.edge(idx);
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg == h.degree;
}

bool subgraph_bounded(const Subgraph& h, const VertexWeights& f) {
  if (static_cast<int>(h.degree.size()) != f.size()) return false;
  for (int v = 0; v < f.size(); ++v)
    if (h.degree[static_cast<std::size_t>(v)] > f.at(v)) return false;
  return true;
}

std::pair<SimpleGraph, GadgetMap> expand_gadget(const Multigraph& g, const VertexWeights& f) {
  require_compatible(g, f);
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::int64_t copies = 0;
  for (int v = 0; v < n; ++v) copies += f.at(v);
  const std::int64_t expanded_vertices = copies + 2 * static_cast<std::int64_t>(m);
  if (expanded_vertices > kMaxExpandedVertices)
    throw GuardError("gadget expansion needs " + std::to_string(expanded_vertices) +
                     " vertices, cap is " + std::to_string(kMaxExpandedVertices));
  std::int64_t expanded_edges = 0;
  for (const Edge& e : g.edges()) {
    expanded_edges += 1 + f.at(e.u) + f.at(e.v);
    if (expanded_edges > kMaxExpandedEdges)
      throw GuardError("gadget expansion needs over " + std::to_string(expanded_edges) +
                       " edges, cap is " + std::to_string(kMaxExpandedEdges));
  }

  GadgetMap map;
  map.vertex_copies.resize(static_cast<std::size_t>(n));
  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    auto& ids = map.vertex_copies[static_cast<std::size_t>(v)];
    ids.resize(static_cast<std::size_t>(f.at(v)));
    for (int& id : ids) id = next_id++;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(expanded_edges));
  map.edge_gadget.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Edge e = g.edge(i);
    const int eu = next_id++;
    const int ev = next_id++;
    map.edge_gadget.emplace_back(eu, ev);
    edges.emplace_back(eu, ev);
    for (int c : map.vertex_copies[static_cast<std::size_t>(e.u)]) edges.emplace_back(eu, c);
    for (int c : map.vertex_copies[static_cast<std::size_t>(e.v)]) edges.emplace_back(ev, c);
  }
  map.expanded_vertex_count = next_id;
  return {SimpleGraph(next_id, edges), std::move(map)};
}

Subgraph brute_force_max_fbounded(const Multigraph& g, const VertexWeights& f) {
  require_compatible(g, f);
  const int m = g.edge_count();
  if (m > kBruteForceEdgeLimit)
    throw GuardError("brute_force_max_fbounded: " + std::to_string(m) +
                     " edges exceed the limit of " + std::to_string(kBruteForceEdgeLimit));
  const int n = g.vertex_count();

  std::uint32_t best_mask = 0;
  int best_size = -1;
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best_size) continue;  // keeps the smallest mask among maxima
    std::fill(deg.begin(), deg.end(), 0);
    bool feasible = true;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const Edge e = g.edge(std::countr_zero(rest));
      if (++deg[static_cast<std::size_t>(e.u)] > f.at(e.u) ||
          ++deg[static_cast<std::size_t>(e.v)] > f.at(e.v)) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      best_mask = mask;
      best_size = size;
    }
  }

  Subgraph h;
  h.degree.assign(static_cast<std::size_t>(n), 0);
  for (std::uint32_t rest = best_mask; rest; rest &= rest - 1) {
    const int idx = std::countr_zero(rest);
    h.edge_indices.push_back(idx);
    const Edge e = g.edge(idx);
    ++h.degree[static_cast<std::size_t>(e.u)];
    ++h.degree[static_cast<std::size_t>(e.v)];
  }
  return h;
}

Subgraph solve_max_fbounded(const Multigraph& g, const VertexWeights& f) {
  require_compatible(g, f);
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // d_H(v) <= deg(v) no matter what f says, so the clamp preserves the
  // optimum while bounding the expansion by 4m vertices.
  std::vector<std::int64_t> clamped(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) clamped[static_cast<std::size_t>(v)] = std::min(f.at(v), g.degree(v));
  auto [expanded, map] = expand_gadget(g, VertexWeights(std::move(clamped)));

  Matching matching = maximum_matching(expanded);

  // Normalize so both gadget vertices of every pair end up matched. A pair
  // with both ends exposed cannot occur in a maximum matching (e_u-e_v would
  // augment it); a pair with one end exposed is rematched onto e_u-e_v, which
  // keeps the cardinality and frees only a vertex copy.
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = map.edge_gadget[static_cast<std::size_t>(i)];
    int& ma = matching.mate[static_cast<std::size_t>(a)];
    int& mb = matching.mate[static_cast<std::size_t>(b)];
    if (ma == Matching::kUnmatched && mb == Matching::kUnmatched) {
      ma = b;
      mb = a;
    } else if (ma == Matching::kUnmatched) {
      matching.mate[static_cast<std::size_t>(mb)] = Matching::kUnmatched;
      ma = b;
      mb = a;
    } else if (mb == Matching::kUnmatched) {
      matching.mate[static_cast<std::size_t>(ma)] = Matching::kUnmatched;
      ma = b;
      mb = a;
    }
  }

  // Edge selected iff its gadget vertices are matched away from each other,
  // i.e. both to vertex copies.
  Subgraph h;
  h.degree.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = map.edge_gadget[static_cast<std::size_t>(i)];
    const int ma = matching.mate[static_cast<std::size_t>(a)];
    const int mb = matching.mate[static_cast<std::size_t>(b)];
    if (ma == Matching::kUnmatched || mb == Matching::kUnmatched)
      throw std::logic_error("gadget pair left uncovered after normalization");
    if (ma == b) continue;
    const Edge e = g.edge(i);
    h.edge_indices.push_back(i);
    ++h.degree[static_cast<std::size_t>(e.u)];
    ++h.degree[static_cast<std::size_t>(e.v)];
  }
  if (matching.size() != m + static_cast<int>(h.edge_indices.size()))
    throw std::logic_error("gadget matching size disagrees with the extracted subgraph");
  return h;
}

std::int64_t h_value(const Multigraph& g, const VertexWeights& f) {
  return solve_max_fbounded(g, f).degree_sum();
}

AugmentedInstance augment_with_w(const Multigraph& g, const VertexWeights& f, std::int64_t gamma) {
  require_compatible(g, f);
  if (gamma <= 0) throw std::invalid_argument("augment_with_w requires gamma >= 1");
  if (gamma > kMaxWeight)
    throw GuardError("augmentation weight " + std::to_string(gamma) + " exceeds the cap of " +
                     std::to_string(kMaxWeight));
  const int n = g.vertex_count();
  const std::int64_t m_prime = g.edge_count() + gamma * static_cast<std::int64_t>(n);
  if (m_prime > kMaxExpandedEdges)
    throw GuardError("augmented instance needs " + std::to_string(m_prime) + " edges, cap is " +
                     std::to_string(kMaxExpandedEdges));

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m_prime));
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int v = 0; v < n; ++v)
    for (std::int64_t k = 0; k < gamma; ++k) edges.emplace_back(v, n);

  std::vector<std::int64_t> weights = f.values();
  weights.push_back(gamma);
  return AugmentedInstance{Multigraph(n + 1, edges), VertexWeights(std::move(weights)), gamma, n};
}

namespace {

constexpr std::uint64_t kNoCode = ~std::uint64_t{0};

// Raw-weight expansion is preferred for the gadget identity check; fall back
// to the clamped weights (same matching size) when the raw expansion is big.
constexpr std::int64_t kGadgetCheckVertexCap = 10'000;

// Aggregates of one pass over all 3^n pairs. first_* fields hold the smallest
// violating pair code, kNoCode if the property held throughout.
struct PairScan {
  std::int64_t max_def = std::numeric_limits<std::int64_t>::min();
  std::int64_t min_schrijver = std::numeric_limits<std::int64_t>::max();
  std::uint64_t first_parity_bad = kNoCode;
  std::uint64_t first_weak_bad = kNoCode;
  std::uint64_t first_identity_bad = kNoCode;
};

PairScan scan_pairs(const Multigraph& g, const VertexWeights& f, std::int64_t h,
                    std::uint64_t begin, std::uint64_t end) {
  PairScan out;
  const int n = g.vertex_count();
  const std::int64_t f_total = f.total();
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t s_bits = 0;
    std::uint64_t t_bits = 0;
    std::uint64_t rest = code;
    for (int v = 0; v < n && rest; ++v) {
      const std::uint64_t digit = rest % 3;
      if (digit == 1) s_bits |= std::uint64_t{1} << v;
      if (digit == 2) t_bits |= std::uint64_t{1} << v;
      rest /= 3;
    }
    const std::int64_t def = detail::deficiency_bits(g, f, s_bits, t_bits);
    const std::int64_t bound = detail::schrijver_bound_bits(g, f, s_bits, t_bits);
    out.max_def = std::max(out.max_def, def);
    out.min_schrijver = std::min(out.min_schrijver, bound);
    if ((def - f_total) % 2 != 0 && out.first_parity_bad == kNoCode) out.first_parity_bad = code;
    if (h > f_total - def && out.first_weak_bad == kNoCode) out.first_weak_bad = code;
    if (2 * bound + def != f_total && out.first_identity_bad == kNoCode)
      out.first_identity_bad = code;
  }
  return out;
}

PairScan merge_scans(PairScan a, const PairScan& b) {
  a.max_def = std::max(a.max_def, b.max_def);
  a.min_schrijver = std::min(a.min_schrijver, b.min_schrijver);
  a.first_parity_bad = std::min(a.first_parity_bad, b.first_parity_bad);
  a.first_weak_bad = std::min(a.first_weak_bad, b.first_weak_bad);
  a.first_identity_bad = std::min(a.first_identity_bad, b.first_identity_bad);
  return a;
}

PairScan run_scan(const Multigraph& g, const VertexWeights& f, std::int64_t h) {
  const std::uint64_t total = pair_count(g.vertex_count());
  const unsigned hw = std::thread::hardware_concurrency();
  if (total < 59049 || hw <= 1) return scan_pairs(g, f, h, 0, total);

  const std::uint64_t chunks = std::min<std::uint64_t>(hw, 64);
  std::vector<std::future<PairScan>> parts;
  parts.reserve(static_cast<std::size_t>(chunks));
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    parts.push_back(std::async(std::launch::async,
                               [&g, &f, h, begin, end] { return scan_pairs(g, f, h, begin, end); }));
  }
  PairScan acc = parts.front().get();
  for (std::size_t c = 1; c < parts.size(); ++c) acc = merge_scans(acc, parts[c].get());
  return acc;
}

std::string pair_failure_detail(const Multigraph& g, const VertexWeights& f, std::uint64_t code) {
  const PartitionPair pair = pair_from_code(code, g.vertex_count());
  return "pair code " + std::to_string(code) + ": def=" +
         std::to_string(deficiency(g, f, pair)) +
         ", bound=" + std::to_string(schrijver_bound(g, f, pair));
}

}  // namespace

VerificationReport verify_minmax(const Multigraph& g, const VertexWeights& f, int limit) {
  require_compatible(g, f);
  VerificationReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.f_total = f.total();

  Subgraph h = solve_max_fbounded(g, f);
  rep.solver_edges = h.edge_count();
  rep.h = h.degree_sum();

  rep.certificate = max_deficiency(g, f, limit);
  rep.gamma = rep.certificate.gamma;

  auto add = [&rep](std::string name, bool passed, std::string detail) {
    rep.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(detail)});
  };

  add("feasibility", subgraph_consistent(g, h) && subgraph_bounded(h, f),
      "solver subgraph violates its degree records or the vertex bounds");

  if (rep.m <= kBruteForceEdgeLimit) {
    const Subgraph brute = brute_force_max_fbounded(g, f);
    rep.brute_edges = brute.edge_count();
    add("oracle_agreement", rep.solver_edges == *rep.brute_edges,
        "solver=" + std::to_string(rep.solver_edges) +
            ", oracle=" + std::to_string(*rep.brute_edges));

    const bool raw_fits = rep.f_total + 2 * rep.m <= kGadgetCheckVertexCap;
    std::optional<VertexWeights> clamped;
    if (!raw_fits) {
      std::vector<std::int64_t> values(static_cast<std::size_t>(rep.n));
      for (int v = 0; v < rep.n; ++v)
        values[static_cast<std::size_t>(v)] = std::min(f.at(v), g.degree(v));
      clamped.emplace(std::move(values));
    }
    const SimpleGraph expanded = expand_gadget(g, raw_fits ? f : *clamped).first;
    const std::int64_t matched = maximum_matching(expanded).size();
    add("gadget_identity", matched == rep.m + rep.solver_edges,
        "matching=" + std::to_string(matched) + ", m=" + std::to_string(rep.m) +
            ", |H|=" + std::to_string(rep.solver_edges));
  }

  add("strong_duality", rep.h == rep.f_total - rep.gamma,
      "h=" + std::to_string(rep.h) + ", f_total=" + std::to_string(rep.f_total) +
          ", gamma=" + std::to_string(rep.gamma));

  const PairScan scan = run_scan(g, f, rep.h);
  rep.min_schrijver = scan.min_schrijver;
  add("weak_duality", scan.first_weak_bad == kNoCode,
      scan.first_weak_bad == kNoCode ? std::string()
                                     : pair_failure_detail(g, f, scan.first_weak_bad));
  add("parity", scan.first_parity_bad == kNoCode,
      scan.first_parity_bad == kNoCode ? std::string()
                                       : pair_failure_detail(g, f, scan.first_parity_bad));
  add("schrijver_identity", scan.first_identity_bad == kNoCode,
      scan.first_identity_bad == kNoCode ? std::string()
                                         : pair_failure_detail(g, f, scan.first_identity_bad));
  add("schrijver_min", rep.min_schrijver == rep.solver_edges,
      "min bound=" + std::to_string(rep.min_schrijver) +
          ", |H|=" + std::to_string(rep.solver_edges));

  add("empty_pair_identity", deficiency_empty_pair_identity(g, f),
      "def(empty,empty) differs from the odd weight-sum component count");
  add("gamma_bound", rep.gamma >= 0 && rep.gamma <= rep.f_total,
      "gamma=" + std::to_string(rep.gamma) + ", f_total=" + std::to_string(rep.f_total));

  const auto& cert = rep.certificate;
  add("certificate_consistency",
      cert.f_total == rep.f_total && deficiency(g, f, cert.pair) == cert.gamma &&
          bad_components(g, f, cert.pair) == cert.bad_components && scan.max_def == cert.gamma,
      "certificate does not recompute: gamma=" + std::to_string(cert.gamma) +
          ", scan max=" + std::to_string(scan.max_def));

  const FFactorResult factor = has_f_factor(g, f, limit);
  add("f_factor_bridge", factor.exists == (rep.h == rep.f_total),
      std::string("factor ") + (factor.exists ? "exists" : "missing") +
          " but h=" + std::to_string(rep.h) + ", f_total=" + std::to_string(rep.f_total));
  if (!factor.exists) {
    add("f_factor_witness",
        factor.witness.has_value() && deficiency(g, f, *factor.witness) > 0,
        "missing or non-positive witness pair for the absent factor");
  }

  if (rep.gamma >= 1) {
    const AugmentedInstance aug = augment_with_w(g, f, rep.gamma);
    const std::int64_t h_prime = h_value(aug.g_prime, aug.f_prime);
    add("w_augmentation", h_prime == aug.f_prime.total(),
        "h'=" + std::to_string(h_prime) +
            ", f'_total=" + std::to_string(aug.f_prime.total()));
  }

  return rep;
}

}  // namespace fbg
