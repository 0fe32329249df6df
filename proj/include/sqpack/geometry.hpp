#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqpack/rational.hpp"

namespace sqpack {

/// Axis-parallel open square, anchored at its lower-left corner.
/// Valid squares have side > 0 and fit inside the closed unit square.
struct Square {
  Rational x;
  Rational y;
  Rational side;

  Rational x_hi() const { return x + side; }
  Rational y_hi() const { return y + side; }
};

/// Ordered collection of squares meant to live inside the unit square with
/// pairwise disjoint open interiors. Invariants are checked by verify(),
/// not enforced on construction, so broken inputs can be reported.
struct Packing {
  std::vector<Square> squares;
  std::string label;

  std::size_t size() const { return squares.size(); }
};

enum class ViolationKind { Containment, Overlap, NonpositiveSide };

struct Violation {
  ViolationKind kind;
  std::size_t first;
  std::size_t second;  // == first for unary violations
  Rational witness_x;
  Rational witness_y;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

struct VerifyOptions {
  // Above this square count the overlap scan switches from all-pairs to a
  // sort-by-x sweep. Exact arithmetic either way.
  std::size_t pairwise_threshold = 5000;
};

/// Exact sum of side lengths.
Rational side_sum(const Packing& p);

/// True iff the open interiors intersect (boundary contact is not overlap).
bool squares_overlap(const Square& a, const Square& b);

/// Full exact validity check: containment in the closed unit square,
/// positive sides, pairwise open-interior disjointness. Violations are
/// reported as data; the report is valid iff there are none.
VerificationReport verify(const Packing& p, const VerifyOptions& options = {});

/// Maps every square (x, y, s) to (factor*x + dx, factor*y + dy, factor*s).
/// Throws std::invalid_argument unless factor > 0.
std::vector<Square> scale_translate(const Packing& p, const Rational& factor,
                                    const Rational& dx, const Rational& dy);

}  // namespace sqpack
