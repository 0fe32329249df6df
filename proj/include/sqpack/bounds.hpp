#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqpack/rational.hpp"

namespace sqpack {

/// Which neighboring statement a derivation leans on: FromBelow uses the
/// statement at c-1 (a=k-1, b=k), FromAbove the one at c+1 (a=k+1, b=k+2).
enum class Direction { FromBelow, FromAbove };

std::string to_string(Direction d);

/// The assumed statement "f(k^2+2c+1) = k + c/k for all k >= |c|".
struct Premise {
  long long c = 0;
  std::string description() const;
};

/// One application of the grid-substitution inequality
///   f(n) <= a - b^2/a + (b/a) * f(b^2 - a^2 + n).
struct BoundStep {
  long long n = 0;
  long long a = 0;
  long long b = 0;
  long long premise_n = 0;  // always b^2 - a^2 + n
  Rational premise_value;
  Rational resulting_bound;  // a - b^2/a + (b/a) * premise_value
};

/// A claimed limit for one statement, backed by a strictly decreasing list of
/// finite bounds at increasing b (only entries past the monotone threshold).
struct LimitClaim {
  long long n = 0;  // the f-argument being bounded, k^2 + 2c + 1
  long long c = 0;
  Direction direction = Direction::FromBelow;
  Rational value;
  std::vector<std::pair<long long, Rational>> witness;
};

/// Replayable record of a bound derivation, conditional on P(assumed_c).
/// Every step can be recomputed from its own fields; premises must resolve
/// to a conjectured value or to an earlier step's conclusion.
struct BoundCertificate {
  long long k = 0;
  long long c = 0;          // target statement index
  long long assumed_c = 0;  // the only unconditional premise
  std::vector<BoundStep> steps;
  std::vector<LimitClaim> limits;  // ordered; the last one is the headline claim
  Rational final_bound;

  bool has_limit_claim() const { return !limits.empty(); }
  const LimitClaim& limit_claim() const { return limits.back(); }
};

/// Evaluates the inequality exactly. Requires 1 <= a <= b, n >= 1 and a
/// nonnegative premise value.
BoundStep substitution_bound(long long n, long long a, long long b,
                             const Rational& premise_value);

/// First derivation step at stage k. Returns the closed-form bound together
/// with the replayed BoundStep; the two must agree exactly.
///   FromBelow: k + c/k + (k+c)/(k(k^2-1)),   premise P(c-1) at stage k+1
///   FromAbove: k + c/k + (k-c)/(k(k+1)^2),   premise P(c+1) at stage k+1
std::pair<Rational, BoundStep> step_one_bound(long long k, long long c, Direction dir);

/// Second step: a = k, arbitrary b, premise = step one at stage b.
///   FromBelow: k + c/k + (b+c)/(k(b^2-1))
///   FromAbove: k + c/k + (b-c)/(k(b+1)^2)
std::pair<Rational, BoundStep> step_two_bound(long long k, long long c, long long b,
                                              Direction dir);

/// Smallest b from which the step-two bounds are strictly decreasing in b.
long long monotone_threshold(long long c, Direction dir);

/// Step-two bounds along the schedule plus the declared limit k + c/k.
/// The schedule must be strictly increasing with at least 3 entries.
BoundCertificate limit_bound(long long k, long long c, Direction dir,
                             const std::vector<long long>& b_schedule);

/// Walks the statement index from c_start to c_target in unit hops
/// (FromBelow when moving up, FromAbove when moving down), re-deriving each
/// intermediate statement at stage k, and returns the composed certificate.
BoundCertificate chain_derive(long long c_start, long long c_target, long long k,
                              const std::vector<long long>& b_schedule);

/// Certificate with a single substitution step and no limit claim; what the
/// single-b bound command emits.
BoundCertificate single_bound_certificate(long long k, long long c, long long b,
                                          Direction dir);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> issues;
  explicit operator bool() const { return ok; }
};

/// Recomputes every step, re-resolves every premise, and re-verifies the
/// monotonicity witnesses. True only if every exact equality holds.
CertificateCheck check_certificate(const BoundCertificate& cert);

/// 10, 100, ..., 10^6.
std::vector<long long> default_b_schedule();

/// One measured estimate for f(k^2+2c+1); epsilon and k*epsilon are always
/// recomputed from the stored fields.
struct EpsilonRecord {
  long long k = 0;
  long long c = 0;
  Rational estimate;

  Rational epsilon() const;    // estimate - (k + c/k)
  Rational k_epsilon() const;  // k * epsilon
  bool above_conjecture() const { return epsilon().sign() > 0; }
};

/// Orders the records by k (stable) and returns them; values come from the
/// accessors so nothing can drift out of sync.
std::vector<EpsilonRecord> epsilon_diagnostic(std::vector<EpsilonRecord> records);

}  // namespace sqpack
