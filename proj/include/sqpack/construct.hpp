#pragma once

#include <optional>

#include "sqpack/geometry.hpp"
#include "sqpack/rational.hpp"

namespace sqpack {

/// How n relates to the nearest usable square: either n = k*k, or
/// n = k*k + 2c + 1 with |c| <= k - 1. Exactly one form applies to each n.
struct Decomposition {
  long long n = 0;
  long long k = 0;
  long long c = 0;
  bool perfect_square = false;
};

/// Throws std::invalid_argument on n <= 0.
Decomposition decompose(long long n);

/// k for perfect squares, k + c/k otherwise. Exact.
Rational conjectured_value(long long n);

/// The standard b-by-b tiling: b^2 squares of side 1/b. side_sum == b.
Packing grid(long long b);

/// Replaces the a-by-a block of cells anchored at (block_col, block_row) in
/// the b-by-b grid with `inner` scaled by a/b. The result has
/// b^2 - a^2 + |inner| squares and side sum (a*side_sum(inner) + b^2 - a^2)/b.
Packing substitute(long long b, long long a, long long block_col,
                   long long block_row, const Packing& inner);

/// Builds an explicit packing of n squares whose side sum realizes the
/// conjectured value: exactly k for n = k^2, exactly k + c/k for c != 0.
/// The c == 0 family needs a caller-supplied slack in (0, 1/k); it reaches
/// k - slack/2, strictly below k, with two squares sharing the vacated cell.
Packing construct_conjectured(long long n, std::optional<Rational> slack = {});

}  // namespace sqpack
