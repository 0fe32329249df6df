#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqpack/geometry.hpp"
#include "sqpack/rational.hpp"

namespace sqpack {

/// Float-space candidate square, pre-snapping.
struct FloatSquare {
  double x = 0.0;
  double y = 0.0;
  double side = 0.0;
};

using FloatPacking = std::vector<FloatSquare>;

/// Everything the annealer needs; identical configs give bit-identical
/// results, restart r draws from a stream derived from (seed, r).
struct SearchConfig {
  long long n = 1;
  std::uint64_t seed = 1;
  int restarts = 12;
  int iterations_per_restart = 40000;
  double initial_temperature = 0.25;
  double cooling_rate = 0.99975;
  double move_scale = 0.12;
  long long snap_denominator_limit = 1000000;
};

struct SearchResult {
  double best_float_sum = 0.0;
  std::optional<Packing> best_packing;  // exact, snapped and repaired
  std::optional<Rational> exact_sum;
  std::optional<Rational> conjecture_gap;  // conjectured_value(n) - exact_sum
  bool counterexample_flag = false;
  int best_restart = -1;
};

/// Multi-start annealing over (x, y, side) triples maximizing the side sum.
/// The float phase never decides anything: the winning candidate is snapped
/// to rationals, exactly repaired and exactly re-verified. Restarts run
/// concurrently; the merge keeps the largest exact snapped sum, ties broken
/// by lowest restart index.
SearchResult search(const SearchConfig& config);

/// Replaces every coordinate by its best rational approximation with
/// denominator <= limit, then uniformly shrinks all sides by the minimal
/// exact factor restoring disjointness and containment. Returns nullopt if
/// no positive shrink factor works or a side collapses to zero.
std::optional<Packing> snap_to_rational(const FloatPacking& candidate,
                                        long long denominator_limit);

/// Exact exceedance test against the conjectured value. A true result is a
/// refutation candidate and must be published with its packing.
bool counterexample_check(const SearchResult& result, long long n);

}  // namespace sqpack
