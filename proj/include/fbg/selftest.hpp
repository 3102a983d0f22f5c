#pragma once

#include <cstdint>
#include <iosfwd>

#include "fbg/formula.hpp"

namespace fbg {

/// Knobs for the randomized property batteries. count scales all three
/// batteries; the instance battery draws n in [1, max_n], m in [0, max_m]
/// and weights in [0, max_f] per instance.
struct SelftestOptions {
  std::int64_t count = 1000;
  std::uint64_t seed = 1;
  int max_n = 7;
  int max_m = 14;
  std::int64_t max_f = 4;
  int limit = kDefaultExhaustiveLimit;
};

/// Runs the instance battery (full min-max verification per instance), the
/// classical battery (simple graphs, matching against two oracles and the
/// f=1 reduction) and the report-only subcubic battery. Prints per-check
/// tallies plus a replay recipe for the first failure. Returns true iff
/// every gating check passed on every instance.
bool run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace fbg
