#include "sqpack/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sqpack/construct.hpp"

namespace sqpack {

std::string to_string(Direction d) {
  return d == Direction::FromBelow ? "from-below" : "from-above";
}

std::string Premise::description() const {
  return "f(k^2 + 2*(" + std::to_string(c) + ") + 1) = k + (" + std::to_string(c) +
         ")/k assumed for all k >= " + std::to_string(std::llabs(c));
}

namespace {

constexpr long long kMaxB = 100000000;  // keeps b^2 - a^2 + n inside int64

long long statement_n(long long k, long long c) { return k * k + 2 * c + 1; }

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BoundStep substitution_bound(long long n, long long a, long long b,
                             const Rational& premise_value) {
  require(n >= 1, "substitution_bound: n must be positive");
  require(a >= 1, "substitution_bound: a must be positive");
  require(a <= b, "substitution_bound: need a <= b");
  require(b <= kMaxB, "substitution_bound: b too large");
  require(premise_value.sign() >= 0, "substitution_bound: negative premise");

  BoundStep step;
  step.n = n;
  step.a = a;
  step.b = b;
  step.premise_n = b * b - a * a + n;
  step.premise_value = premise_value;
  step.resulting_bound =
      Rational(a) - Rational(b * b, a) + Rational(b, a) * premise_value;
  return step;
}

std::pair<Rational, BoundStep> step_one_bound(long long k, long long c, Direction dir) {
  require(k >= 1, "step_one_bound: k must be positive");
  require(k >= std::llabs(c), "step_one_bound: need k >= |c|");
  if (dir == Direction::FromBelow) {
    require(k >= 2, "step_one_bound: from-below needs k >= 2");
    require(k + 1 >= std::llabs(c - 1), "step_one_bound: premise stage too small");
    Rational premise = Rational(k + 1) + Rational(c - 1, k + 1);
    BoundStep step = substitution_bound(statement_n(k, c), k - 1, k, premise);
    Rational closed =
        Rational(k) + Rational(c, k) + Rational(k + c, k * (k * k - 1));
    return {closed, step};
  }
  require(k + 1 >= std::llabs(c + 1), "step_one_bound: premise stage too small");
  Rational premise = Rational(k + 1) + Rational(c + 1, k + 1);
  BoundStep step = substitution_bound(statement_n(k, c), k + 1, k + 2, premise);
  Rational closed =
      Rational(k) + Rational(c, k) + Rational(k - c, k * (k + 1) * (k + 1));
  return {closed, step};
}

std::pair<Rational, BoundStep> step_two_bound(long long k, long long c, long long b,
                                              Direction dir) {
  require(k >= 1, "step_two_bound: k must be positive");
  require(k >= std::llabs(c), "step_two_bound: need k >= |c|");
  require(b >= k, "step_two_bound: need b >= k for the substitution");
  require(b >= std::max(2ll, std::llabs(c) + 1), "step_two_bound: b too small");
  auto [inner_closed, inner] = step_one_bound(b, c, dir);
  BoundStep step = substitution_bound(statement_n(k, c), k, b, inner.resulting_bound);
  Rational closed = dir == Direction::FromBelow
                        ? Rational(k) + Rational(c, k) + Rational(b + c, k * (b * b - 1))
                        : Rational(k) + Rational(c, k) +
                              Rational(b - c, k * (b + 1) * (b + 1));
  (void)inner_closed;
  return {closed, step};
}

long long monotone_threshold(long long c, Direction dir) {
  long long t = std::max(2ll, std::llabs(c) + 1);
  if (dir == Direction::FromBelow && c < 0) t = std::max(t, -2 * c);
  if (dir == Direction::FromAbove && c > 0) t = std::max(t, 2 * c + 2);
  return t;
}

namespace {

// Appends the inner (stage b) and outer (stage k) steps for every schedule
// entry, and the resulting limit claim for statement c.
void append_hop(BoundCertificate& cert, long long k, long long c, Direction dir,
                const std::vector<long long>& schedule) {
  LimitClaim claim;
  claim.n = statement_n(k, c);
  claim.c = c;
  claim.direction = dir;
  claim.value = Rational(k) + Rational(c, k);

  long long threshold = monotone_threshold(c, dir);
  for (long long b : schedule) {
    auto [inner_closed, inner] = step_one_bound(b, c, dir);
    (void)inner_closed;
    BoundStep outer = substitution_bound(claim.n, k, b, inner.resulting_bound);
    Rational bound = outer.resulting_bound;
    cert.steps.push_back(std::move(inner));
    cert.steps.push_back(std::move(outer));
    if (b >= threshold) {
      if (!claim.witness.empty() && !(bound < claim.witness.back().second))
        throw std::logic_error("bound sequence failed to decrease past the threshold");
      claim.witness.emplace_back(b, std::move(bound));
    }
  }
  cert.limits.push_back(std::move(claim));
}

void validate_schedule(const std::vector<long long>& schedule, long long k, long long c) {
  require(schedule.size() >= 3, "b schedule needs at least 3 entries");
  long long min_b = std::max({2ll, std::llabs(c) + 1, k});
  long long prev = 0;
  for (long long b : schedule) {
    require(b > prev, "b schedule must be strictly increasing");
    require(b >= min_b, "b schedule entry below the valid range for this k, c");
    prev = b;
  }
}

}  // namespace

BoundCertificate limit_bound(long long k, long long c, Direction dir,
                             const std::vector<long long>& b_schedule) {
  require(k >= 1, "limit_bound: k must be positive");
  require(k >= std::llabs(c), "limit_bound: need k >= |c|");
  validate_schedule(b_schedule, k, c);

  BoundCertificate cert;
  cert.k = k;
  cert.c = c;
  cert.assumed_c = dir == Direction::FromBelow ? c - 1 : c + 1;
  append_hop(cert, k, c, dir, b_schedule);
  cert.final_bound = cert.limits.back().value;
  return cert;
}

BoundCertificate chain_derive(long long c_start, long long c_target, long long k,
                              const std::vector<long long>& b_schedule) {
  require(k >= 1, "chain_derive: k must be positive");
  require(k >= std::llabs(c_target), "chain_derive: need k >= |c_target|");

  BoundCertificate cert;
  cert.k = k;
  cert.c = c_target;
  cert.assumed_c = c_start;

  if (c_start == c_target) {
    require(k >= std::llabs(c_start), "chain_derive: need k >= |c_start|");
    cert.final_bound = Rational(k) + Rational(c_target, k);
    return cert;
  }

  Direction dir = c_target > c_start ? Direction::FromBelow : Direction::FromAbove;
  long long step = c_target > c_start ? 1 : -1;
  for (long long c = c_start + step;; c += step) {
    require(k >= std::llabs(c), "chain_derive: intermediate statement out of stage range");
    validate_schedule(b_schedule, k, c);
    append_hop(cert, k, c, dir, b_schedule);
    if (c == c_target) break;
  }
  cert.final_bound = cert.limits.back().value;
  return cert;
}

BoundCertificate single_bound_certificate(long long k, long long c, long long b,
                                          Direction dir) {
  auto [closed, outer] = step_two_bound(k, c, b, dir);
  (void)closed;
  auto [inner_closed, inner] = step_one_bound(b, c, dir);
  (void)inner_closed;

  BoundCertificate cert;
  cert.k = k;
  cert.c = c;
  cert.assumed_c = dir == Direction::FromBelow ? c - 1 : c + 1;
  cert.final_bound = outer.resulting_bound;
  cert.steps.push_back(std::move(inner));
  cert.steps.push_back(std::move(outer));
  return cert;
}

CertificateCheck check_certificate(const BoundCertificate& cert) {
  CertificateCheck check;
  auto complain = [&](std::string msg) { check.issues.push_back(std::move(msg)); };

  if (cert.k < 1) complain("target k must be positive");
  if (cert.k < std::llabs(cert.c)) complain("target violates k >= |c|");

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const BoundStep& s = cert.steps[i];
    std::string at = "step " + std::to_string(i) + ": ";
    bool ranges_ok = true;
    if (s.n < 1) {
      complain(at + "n must be positive");
      ranges_ok = false;
    }
    if (s.a < 1 || s.a > s.b) {
      complain(at + "needs 1 <= a <= b");
      ranges_ok = false;
    }
    if (s.b > kMaxB) {
      complain(at + "b out of range");
      ranges_ok = false;
    }
    if (!ranges_ok) continue;
    if (s.premise_n != s.b * s.b - s.a * s.a + s.n)
      complain(at + "premise_n does not equal b^2 - a^2 + n");
    if (s.premise_value.sign() < 0) complain(at + "negative premise value");
    Rational expect =
        Rational(s.a) - Rational(s.b * s.b, s.a) + Rational(s.b, s.a) * s.premise_value;
    if (s.resulting_bound != expect)
      complain(at + "resulting_bound does not replay from the inputs");

    // A premise must be a conjectured value at a legal stage, or the
    // conclusion of an earlier step for the same argument.
    bool resolved = false;
    if (s.premise_n >= 1 && conjectured_value(s.premise_n) == s.premise_value)
      resolved = true;
    for (std::size_t j = 0; !resolved && j < i; ++j)
      if (cert.steps[j].n == s.premise_n &&
          cert.steps[j].resulting_bound == s.premise_value)
        resolved = true;
    if (!resolved) complain(at + "premise is neither conjectured nor derived earlier");
  }

  for (std::size_t li = 0; li < cert.limits.size(); ++li) {
    const LimitClaim& claim = cert.limits[li];
    std::string at = "limit " + std::to_string(li) + ": ";
    if (claim.n < 1) {
      complain(at + "bad statement argument");
      continue;
    }
    if (conjectured_value(claim.n) != claim.value)
      complain(at + "claimed value is not the conjectured value");
    long long prev_b = 0;
    const Rational* prev_bound = nullptr;
    for (const auto& [b, bound] : claim.witness) {
      if (b <= prev_b) complain(at + "witness b values must strictly increase");
      prev_b = b;
      if (prev_bound && !(bound < *prev_bound))
        complain(at + "witness bounds must strictly decrease");
      prev_bound = &bound;
      if (!(claim.value < bound)) complain(at + "witness bound does not exceed the claim");
      bool found = false;
      for (const BoundStep& s : cert.steps)
        if (s.n == claim.n && s.b == b && s.resulting_bound == bound) {
          found = true;
          break;
        }
      if (!found) complain(at + "witness entry has no matching step");
    }
  }

  if (cert.steps.empty() && cert.limits.empty()) {
    // trivial certificate: the premise itself, at stage k
    if (cert.assumed_c != cert.c)
      complain("empty certificate must assume the target statement");
    Rational direct = Rational(cert.k) + Rational(cert.c, cert.k);
    if (cert.final_bound != direct)
      complain("final_bound of trivial certificate must equal k + c/k");
  } else {
    bool matches_last_step =
        !cert.steps.empty() && cert.final_bound == cert.steps.back().resulting_bound;
    bool matches_limit =
        !cert.limits.empty() && cert.final_bound == cert.limits.back().value;
    if (!matches_last_step && !matches_limit)
      complain("final_bound matches neither the last step nor the limit claim");
  }

  check.ok = check.issues.empty();
  return check;
}

std::vector<long long> default_b_schedule() {
  return {10, 100, 1000, 10000, 100000, 1000000};
}

Rational EpsilonRecord::epsilon() const {
  return estimate - (Rational(k) + Rational(c, k));
}

Rational EpsilonRecord::k_epsilon() const { return Rational(k) * epsilon(); }

std::vector<EpsilonRecord> epsilon_diagnostic(std::vector<EpsilonRecord> records) {
  for (const EpsilonRecord& r : records) {
    require(r.k >= 1, "epsilon_diagnostic: k must be positive");
    require(r.k >= std::llabs(r.c), "epsilon_diagnostic: need k >= |c|");
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const EpsilonRecord& a, const EpsilonRecord& b) { return a.k < b.k; });
  return records;
}

}  // namespace sqpack
