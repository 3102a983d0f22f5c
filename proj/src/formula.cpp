#include "fbg/formula.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "fbg/solver.hpp"

namespace fbg {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// Walks the connected components of the induced subgraph on r_bits and calls
/// fn(component_bits) for each, in ascending order of smallest vertex id.
template <typename Fn>
void for_each_component(const Multigraph& g, std::uint64_t r_bits, Fn&& fn) {
  std::uint64_t rest = r_bits;
  while (rest) {
    const int v = std::countr_zero(rest);
    std::uint64_t comp = bit(v);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t fbits = frontier; fbits; fbits &= fbits - 1)
        next |= g.adjacency_bits(std::countr_zero(fbits));
      next &= r_bits & ~comp;
      comp |= next;
      frontier = next;
    }
    fn(comp);
    rest &= ~comp;
  }
}

std::int64_t weight_sum_bits(const VertexWeights& f, std::uint64_t bits) {
  std::int64_t acc = 0;
  for (; bits; bits &= bits - 1) acc += f.at(std::countr_zero(bits));
  return acc;
}

std::int64_t cross_count_bits(const Multigraph& g, std::uint64_t a_bits, std::uint64_t b_bits) {
  std::int64_t acc = 0;
  for (std::uint64_t a = a_bits; a; a &= a - 1) {
    const int u = std::countr_zero(a);
    for (std::uint64_t b = b_bits; b; b &= b - 1) acc += g.multiplicity(u, std::countr_zero(b));
  }
  return acc;
}

std::int64_t degree_sum_avoiding_bits(const Multigraph& g, std::uint64_t t_bits,
                                      std::uint64_t s_bits) {
  std::int64_t acc = 0;
  for (std::uint64_t t = t_bits; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    acc += g.degree(v);
    for (std::uint64_t s = s_bits; s; s &= s - 1) acc -= g.multiplicity(v, std::countr_zero(s));
  }
  return acc;
}

void decode_code(std::uint64_t code, int n, std::uint64_t& s_bits, std::uint64_t& t_bits) {
  s_bits = 0;
  t_bits = 0;
  for (int v = 0; v < n; ++v) {
    switch (code % 3) {
      case 1: s_bits |= bit(v); break;
      case 2: t_bits |= bit(v); break;
      default: break;
    }
    code /= 3;
  }
}

struct ScanBest {
  std::int64_t gamma;
  std::uint64_t code;
};

/// Scans codes in [begin, end) and returns the first code attaining the
/// maximum deficiency in that range.
ScanBest scan_range(const Multigraph& g, const VertexWeights& f, std::uint64_t begin,
                    std::uint64_t end) {
  const int n = g.vertex_count();
  ScanBest best{std::numeric_limits<std::int64_t>::min(), begin};
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t s_bits, t_bits;
    decode_code(code, n, s_bits, t_bits);
    const std::int64_t def = detail::deficiency_bits(g, f, s_bits, t_bits);
    if (def > best.gamma) {
      best.gamma = def;
      best.code = code;
    }
  }
  return best;
}

void check_exhaustive_limit(const Multigraph& g, int limit) {
  if (limit < 0 || limit > kMaxExhaustiveLimit)
    throw GuardError("exhaustive limit must be between 0 and " +
                     std::to_string(kMaxExhaustiveLimit));
  if (g.vertex_count() > limit)
    throw GuardError("instance too large for exhaustive enumeration: n=" +
                     std::to_string(g.vertex_count()) + ", limit=" + std::to_string(limit));
}

}  // namespace

namespace detail {

std::int64_t deficiency_bits(const Multigraph& g, const VertexWeights& f, std::uint64_t s_bits,
                             std::uint64_t t_bits) {
  const std::uint64_t r_bits = g.vertices().bits() & ~s_bits & ~t_bits;
  std::int64_t q = 0;
  for_each_component(g, r_bits, [&](std::uint64_t comp) {
    const std::int64_t key = weight_sum_bits(f, comp) + cross_count_bits(g, comp, t_bits);
    q += key & 1;
  });
  return weight_sum_bits(f, t_bits) - weight_sum_bits(f, s_bits) -
         degree_sum_avoiding_bits(g, t_bits, s_bits) + q;
}

std::int64_t schrijver_bound_bits(const Multigraph& g, const VertexWeights& f,
                                  std::uint64_t s_bits, std::uint64_t t_bits) {
  const std::uint64_t r_bits = g.vertices().bits() & ~s_bits & ~t_bits;
  std::int64_t acc = weight_sum_bits(f, s_bits) +
                     g.edges_within(VertexSet::from_bits(t_bits));
  for_each_component(g, r_bits, [&](std::uint64_t comp) {
    acc += (weight_sum_bits(f, comp) + cross_count_bits(g, comp, t_bits)) / 2;
  });
  return acc;
}

}  // namespace detail

std::uint64_t pair_code(const PartitionPair& pair, int n) {
  std::uint64_t code = 0;
  for (int v = n - 1; v >= 0; --v) {
    code *= 3;
    if (pair.s.contains(v)) code += 1;
    else if (pair.t.contains(v)) code += 2;
  }
  return code;
}

PartitionPair pair_from_code(std::uint64_t code, int n) {
  std::uint64_t s_bits, t_bits;
  decode_code(code, n, s_bits, t_bits);
  return PartitionPair(VertexSet::from_bits(s_bits), VertexSet::from_bits(t_bits));
}

std::uint64_t pair_count(int n) {
  if (n < 0 || n > 40) throw GuardError("pair_count: vertex count out of range");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  return total;
}

bool is_bad_component(const Multigraph& g, const VertexWeights& f, VertexSet q, VertexSet t) {
  require_compatible(g, f);
  if (!q.disjoint(t)) throw std::invalid_argument("component must be disjoint from T");
  return ((f.sum(q) + g.edges_between(q, t)) & 1) != 0;
}

std::vector<VertexSet> bad_components(const Multigraph& g, const VertexWeights& f,
                                      const PartitionPair& pair) {
  require_compatible(g, f);
  std::vector<VertexSet> out;
  const std::uint64_t r_bits = g.vertices().bits() & ~pair.s.bits() & ~pair.t.bits();
  for_each_component(g, r_bits, [&](std::uint64_t comp) {
    const std::int64_t key =
        weight_sum_bits(f, comp) + cross_count_bits(g, comp, pair.t.bits());
    if (key & 1) out.push_back(VertexSet::from_bits(comp));
  });
  return out;
}

std::int64_t q_count(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair) {
  require_compatible(g, f);
  std::int64_t q = 0;
  const std::uint64_t r_bits = g.vertices().bits() & ~pair.s.bits() & ~pair.t.bits();
  for_each_component(g, r_bits, [&](std::uint64_t comp) {
    const std::int64_t key =
        weight_sum_bits(f, comp) + cross_count_bits(g, comp, pair.t.bits());
    q += key & 1;
  });
  return q;
}

std::int64_t deficiency(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair) {
  require_compatible(g, f);
  return detail::deficiency_bits(g, f, pair.s.bits(), pair.t.bits());
}

std::int64_t schrijver_bound(const Multigraph& g, const VertexWeights& f,
                             const PartitionPair& pair) {
  require_compatible(g, f);
  return detail::schrijver_bound_bits(g, f, pair.s.bits(), pair.t.bits());
}

bool parity_check(const Multigraph& g, const VertexWeights& f, const PartitionPair& pair) {
  const std::int64_t def = deficiency(g, f, pair);
  return ((def - f.total()) % 2) == 0;
}

bool deficiency_empty_pair_identity(const Multigraph& g, const VertexWeights& f) {
  require_compatible(g, f);
  const std::int64_t def = detail::deficiency_bits(g, f, 0, 0);
  std::int64_t odd_components = 0;
  for (VertexSet comp : g.components(g.vertices()))
    if (f.sum(comp) % 2 != 0) ++odd_components;
  return def == odd_components;
}

DeficiencyCertificate max_deficiency(const Multigraph& g, const VertexWeights& f, int limit) {
  require_compatible(g, f);
  check_exhaustive_limit(g, limit);

  const int n = g.vertex_count();
  const std::uint64_t total = pair_count(n);

  ScanBest best{std::numeric_limits<std::int64_t>::min(), 0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (total >= 59049 && hw > 1) {  // 3^10; smaller scans are faster sequentially
    const std::uint64_t chunks = std::min<std::uint64_t>(hw, 64);
    std::vector<std::future<ScanBest>> futures;
    futures.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      futures.push_back(std::async(std::launch::async, [&g, &f, begin, end] {
        return scan_range(g, f, begin, end);
      }));
    }
    // merged in chunk order, so ties resolve to the smallest code
    for (auto& fut : futures) {
      const ScanBest local = fut.get();
      if (local.gamma > best.gamma) best = local;
    }
  } else {
    best = scan_range(g, f, 0, total);
  }

  PartitionPair pair = pair_from_code(best.code, n);
  DeficiencyCertificate cert{pair, best.gamma, bad_components(g, f, pair), f.total()};

  if (cert.gamma < 0) throw std::logic_error("maximum deficiency below zero");
  if ((cert.gamma - cert.f_total) % 2 != 0)
    throw std::logic_error("maximum deficiency parity violation");
  if (deficiency(g, f, pair) != cert.gamma)
    throw std::logic_error("certificate deficiency mismatch");
  return cert;
}

FFactorResult has_f_factor(const Multigraph& g, const VertexWeights& f, int limit) {
  require_compatible(g, f);
  if (g.vertex_count() <= limit && limit <= kMaxExhaustiveLimit) {
    DeficiencyCertificate cert = max_deficiency(g, f, limit);
    if (cert.gamma == 0) return FFactorResult{true, std::nullopt};
    return FFactorResult{false, cert.pair};
  }
  // Large instances: an f-factor exists iff some f-bounded subgraph reaches
  // degree sum f(V). No pair certificate is available on this path.
  return FFactorResult{h_value(g, f) == f.total(), std::nullopt};
}

}  // namespace fbg
