#include "fbg/selftest.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fbg/generator.hpp"
#include "fbg/io.hpp"
#include "fbg/matcher.hpp"
#include "fbg/solver.hpp"

namespace fbg {

namespace {

struct Tally {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
};

/// Per-check counters in first-seen order (fixed by the seed, so the output
/// stays deterministic).
class TallySheet {
 public:
  void record(const std::string& name, bool ok) {
    for (Tally& t : tallies_) {
      if (t.name == name) {
        ++t.total;
        if (ok) ++t.passed;
        return;
      }
    }
    tallies_.push_back({name, ok ? 1 : 0, 1});
  }

  bool all_passed() const {
    for (const Tally& t : tallies_)
      if (t.passed != t.total) return false;
    return true;
  }

  void print(std::ostream& out) const {
    for (const Tally& t : tallies_)
      out << "  " << t.name << ": " << t.passed << "/" << t.total << '\n';
  }

 private:
  std::vector<Tally> tallies_;
};

struct RawGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

std::string edge_list_text(const RawGraph& raw) {
  std::string out = "n = " + std::to_string(raw.n) + ", edges:";
  if (raw.edges.empty()) out += " none";
  for (const auto& [u, v] : raw.edges)
    out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
  return out;
}

/// Simple graph on up to max_n vertices, each pair present with probability
/// 1/2; redrawn until the edge count fits the brute-force oracle.
RawGraph random_simple_graph(SplitMix64& rng, int max_n) {
  RawGraph raw;
  raw.n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  for (;;) {
    raw.edges.clear();
    for (int u = 0; u < raw.n; ++u)
      for (int v = u + 1; v < raw.n; ++v)
        if (rng.below(2) == 1) raw.edges.emplace_back(u, v);
    if (static_cast<int>(raw.edges.size()) <= kBruteForceEdgeLimit) return raw;
  }
}

/// Simple graph with maximum degree <= 3: 3n insertion attempts at uniform
/// pairs, each kept when it stays simple and subcubic.
RawGraph random_subcubic_graph(SplitMix64& rng) {
  RawGraph raw;
  raw.n = 4 + static_cast<int>(rng.below(5));
  const int n = raw.n;
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  const std::uint64_t npairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (int attempt = 0; attempt < 3 * n; ++attempt) {
    std::uint64_t k = rng.below(npairs);
    int u = 0;
    while (k >= static_cast<std::uint64_t>(n - 1 - u)) {
      k -= static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    const int v = u + 1 + static_cast<int>(k);
    if (present[static_cast<std::size_t>(u) * n + v] || deg[u] >= 3 || deg[v] >= 3) continue;
    present[static_cast<std::size_t>(u) * n + v] = 1;
    ++deg[u];
    ++deg[v];
    raw.edges.emplace_back(u, v);
  }
  return raw;
}

}  // namespace

bool run_selftest(const SelftestOptions& options, std::ostream& out) {
  if (options.count < 0) throw GuardError("selftest count must be nonnegative");
  if (options.max_n < 1 || options.max_n > kMaxVertices)
    throw GuardError("selftest requires 1 <= n <= " + std::to_string(kMaxVertices));
  if (options.limit < 0 || options.limit > kMaxExhaustiveLimit)
    throw GuardError("exhaustive limit must be between 0 and " +
                     std::to_string(kMaxExhaustiveLimit));
  if (options.max_n > options.limit)
    throw GuardError("selftest requires n <= the exhaustive limit of " +
                     std::to_string(options.limit));
  if (options.max_m < 0) throw GuardError("selftest requires m >= 0");
  if (options.max_f < 0 || options.max_f > kMaxWeight)
    throw GuardError("fmax must be between 0 and " + std::to_string(kMaxWeight));

  bool ok = true;
  std::string first_failure;

  // Instance battery: the full verification report on random multigraphs.
  TallySheet instance_tallies;
  out << "instance battery: " << options.count << " instance(s), base seed " << options.seed
      << " (n <= " << options.max_n << ", m <= " << options.max_m << ", f <= " << options.max_f
      << ")\n";
  for (std::int64_t i = 0; i < options.count; ++i) {
    const std::uint64_t seed_i = options.seed + static_cast<std::uint64_t>(i);
    SplitMix64 rng(seed_i);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(options.max_n)));
    const int m =
        n == 1 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(options.max_m) + 1));
    const std::uint64_t gen_seed = rng.next();
    const Instance inst = generate_instance(n, m, options.max_f, gen_seed);
    const VerificationReport rep = verify_minmax(inst.graph, inst.weights, options.limit);
    for (const VerificationCheck& check : rep.checks)
      instance_tallies.record(check.name, check.passed);
    if (!rep.all_passed() && first_failure.empty()) {
      ok = false;
      std::ostringstream fail;
      fail << "FAIL check '" << rep.first_failure()->name << "' on instance " << i << '\n';
      fail << "  replay: selftest --count 1 --seed " << seed_i << " --n " << options.max_n
           << " --m " << options.max_m << " --fmax " << options.max_f << '\n';
      fail << "  replay: gen --n " << n << " --m " << m << " --fmax " << options.max_f
           << " --seed " << gen_seed << '\n';
      fail << serialize_instance(inst);
      write_verification_report(fail, rep, OutputFormat::kText);
      first_failure = fail.str();
    }
  }
  ok = ok && instance_tallies.all_passed();
  instance_tallies.print(out);

  // Classical battery: maximum matching against both oracles, plus the f=1
  // reduction of the deficiency machinery to the classical formula.
  TallySheet classical_tallies;
  out << "classical battery: " << options.count << " simple graph(s) (n <= 8)\n";
  for (std::int64_t i = 0; i < options.count; ++i) {
    const std::uint64_t seed_i =
        options.seed + static_cast<std::uint64_t>(options.count) + static_cast<std::uint64_t>(i);
    SplitMix64 rng(seed_i);
    const RawGraph raw = random_simple_graph(rng, 8);
    const SimpleGraph sg(raw.n, raw.edges);
    const Matching mm = maximum_matching(sg);
    const std::int64_t size = mm.size();

    const Multigraph g(raw.n, raw.edges);
    const VertexWeights ones = VertexWeights::constant(raw.n, 1);
    const DeficiencyCertificate cert = max_deficiency(g, ones, 8);

    // max_S def(S, empty) and the literal odd-component formula, per subset.
    std::int64_t best_t_empty = 0;
    bool formula_ok = true;
    const std::uint64_t full = raw.n == 0 ? 0 : (~std::uint64_t{0} >> (64 - raw.n));
    for (std::uint64_t s_bits = 0;; ++s_bits) {
      const std::int64_t def = detail::deficiency_bits(g, ones, s_bits, 0);
      std::int64_t odd = 0;
      for (VertexSet q : g.components(VertexSet::from_bits(full & ~s_bits)))
        if (q.size() % 2 != 0) ++odd;
      if (def != odd - std::popcount(s_bits)) formula_ok = false;
      best_t_empty = std::max(best_t_empty, def);
      if (s_bits == full) break;
    }

    const bool checks[] = {
        mm.valid_for(sg),
        size == matching_size_brute(sg),
        size == tutte_berge_value(sg, 8),
        cert.gamma == best_t_empty,
        formula_ok,
        2 * size == raw.n - cert.gamma,
    };
    const char* names[] = {
        "matching_valid",        "matching_equals_oracle",      "matching_equals_tutte_berge",
        "t_empty_reduction",     "classical_deficiency_formula", "tutte_berge_via_pairs",
    };
    for (int c = 0; c < 6; ++c) {
      classical_tallies.record(names[c], checks[c]);
      if (!checks[c] && first_failure.empty()) {
        ok = false;
        first_failure = "FAIL classical check '" + std::string(names[c]) + "' on graph " +
                        std::to_string(i) + " (seed " + std::to_string(seed_i) + ")\n  " +
                        edge_list_text(raw) + "\n";
      }
    }
  }
  ok = ok && classical_tallies.all_passed();
  classical_tallies.print(out);

  // Report-only battery: on subcubic graphs with f = 2, some maximizing pair
  // should leave T edgeless. Observed, never gating.
  const std::int64_t subcubic_count = options.count / 5;
  std::int64_t witnessed = 0;
  for (std::int64_t i = 0; i < subcubic_count; ++i) {
    const std::uint64_t seed_i = options.seed +
                                 2 * static_cast<std::uint64_t>(options.count) +
                                 static_cast<std::uint64_t>(i);
    SplitMix64 rng(seed_i);
    const RawGraph raw = random_subcubic_graph(rng);
    const Multigraph g(raw.n, raw.edges);
    const VertexWeights twos = VertexWeights::constant(raw.n, 2);
    const DeficiencyCertificate cert = max_deficiency(g, twos, 8);
    const std::uint64_t total = pair_count(raw.n);
    for (std::uint64_t code = 0; code < total; ++code) {
      const PartitionPair pair = pair_from_code(code, raw.n);
      if (deficiency(g, twos, pair) == cert.gamma && g.edges_within(pair.t) == 0) {
        ++witnessed;
        break;
      }
    }
  }
  out << "subcubic f=2 battery (report only): edgeless-T maximizer on " << witnessed << "/"
      << subcubic_count << " graph(s)\n";

  if (!first_failure.empty()) out << first_failure;
  out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

}  // namespace fbg
