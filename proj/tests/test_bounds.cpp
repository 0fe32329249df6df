#include <doctest.h>

#include <stdexcept>

#include "sqpack/bounds.hpp"
#include "sqpack/construct.hpp"
#include "sqpack/io.hpp"

using namespace sqpack;

TEST_CASE("substitution_bound evaluates the inequality exactly") {
  // premise f(8) = 8/3, i.e. the statement at c=-1 applied at stage 3
  BoundStep s1 = substitution_bound(5, 1, 2, Rational(8, 3));
  CHECK(s1.premise_n == 8);
  CHECK(s1.resulting_bound == Rational(7, 3));

  BoundStep s2 = substitution_bound(7, 3, 3, Rational(5, 2));
  CHECK(s2.premise_n == 7);
  CHECK(s2.resulting_bound == Rational(5, 2));  // a == b is the identity

  BoundStep s3 = substitution_bound(12, 2, 3, Rational(4));
  CHECK(s3.premise_n == 17);
  CHECK(s3.resulting_bound == Rational(7, 2));

  CHECK_THROWS_AS(substitution_bound(5, 3, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(substitution_bound(5, 0, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(substitution_bound(5, 1, 2, Rational(-1)), std::invalid_argument);
}

TEST_CASE("step one, from below") {
  auto [v1, s1] = step_one_bound(3, 1, Direction::FromBelow);
  CHECK(v1 == Rational(7, 2));
  CHECK(s1.resulting_bound == v1);
  CHECK(s1.a == 2);
  CHECK(s1.b == 3);
  CHECK(s1.premise_n == 17);

  auto [v2, s2] = step_one_bound(2, 0, Direction::FromBelow);
  CHECK(v2 == Rational(7, 3));
  CHECK(s2.resulting_bound == v2);

  CHECK_THROWS_AS(step_one_bound(1, 0, Direction::FromBelow), std::invalid_argument);
  CHECK_THROWS_AS(step_one_bound(2, 3, Direction::FromBelow), std::invalid_argument);
}

TEST_CASE("step one, from above (derived mirror)") {
  auto [v1, s1] = step_one_bound(3, 1, Direction::FromAbove);
  CHECK(v1 == Rational(27, 8));
  CHECK(v1 == Rational(10, 3) + Rational(2, 48));
  CHECK(s1.resulting_bound == v1);  // the replay through the inequality agrees
  CHECK(s1.a == 4);
  CHECK(s1.b == 5);

  // c == k: the residual vanishes and the bound is exactly k + c/k
  for (long long k : {1, 2, 5, 9}) {
    auto [v, s] = step_one_bound(k, k, Direction::FromAbove);
    CHECK(v == Rational(k) + Rational(k, k));
    CHECK(s.resulting_bound == v);
  }
}

TEST_CASE("closed forms equal the replayed inequality for all k <= 50") {
  for (long long k = 2; k <= 50; ++k) {
    for (long long c = -(k - 1); c <= k - 1; ++c) {
      auto [below, sb] = step_one_bound(k, c, Direction::FromBelow);
      CHECK(below == sb.resulting_bound);
      CHECK(below ==
            Rational(k) + Rational(c, k) + Rational(k + c, k * (k * k - 1)));
      auto [above, sa] = step_one_bound(k, c, Direction::FromAbove);
      CHECK(above == sa.resulting_bound);
      CHECK(above ==
            Rational(k) + Rational(c, k) + Rational(k - c, k * (k + 1) * (k + 1)));
    }
  }
}

TEST_CASE("step two") {
  auto [v1, s1] = step_two_bound(3, 1, 100, Direction::FromBelow);
  CHECK(v1 == Rational(10, 3) + Rational(101, 29997));
  CHECK(s1.resulting_bound == v1);

  auto [v2, s2] = step_two_bound(2, 0, 10, Direction::FromBelow);
  CHECK(v2 == Rational(2) + Rational(5, 99));
  CHECK(s2.resulting_bound == v2);

  auto [v3, s3] = step_two_bound(3, 1, 100, Direction::FromAbove);
  CHECK(v3 == Rational(10, 3) + Rational(99, 3 * 101 * 101));
  CHECK(s3.resulting_bound == v3);

  CHECK_THROWS_AS(step_two_bound(3, 1, 1, Direction::FromBelow), std::invalid_argument);
  CHECK_THROWS_AS(step_two_bound(3, 2, 2, Direction::FromBelow), std::invalid_argument);
}

TEST_CASE("step-two residual signs") {
  for (long long k = 1; k <= 12; ++k) {
    for (long long c = -k; c <= k; ++c) {
      if (k * k + 2 * c + 1 < 1) continue;  // the k=1, c=-1 statement is about zero squares
      Rational conj = Rational(k) + Rational(c, k);
      long long b_min = std::max({2ll, std::llabs(c) + 1, k});
      for (long long b = b_min; b <= b_min + 12; ++b) {
        auto [below, sb] = step_two_bound(k, c, b, Direction::FromBelow);
        CHECK(below - conj > Rational(0));  // (b+c)/(k(b^2-1)) > 0 for b > |c|
        auto [above, sa] = step_two_bound(k, c, b, Direction::FromAbove);
        CHECK(above - conj >= Rational(0));
        (void)sb;
        (void)sa;
      }
      // step one from above: residual (k-c)/(k(k+1)^2) vanishes only at c == k
      auto [one, so] = step_one_bound(k, c, Direction::FromAbove);
      if (c == k)
        CHECK(one == conj);
      else
        CHECK(one > conj);
      (void)so;
    }
  }
}

TEST_CASE("limit squeeze: residual below 1/b past an explicit threshold") {
  // From below the squeeze needs k >= 2: at k=1 the residual is b/(b^2-1),
  // which stays above 1/b. From above it holds for every k >= 1.
  for (long long k : {1, 2, 3, 7, 11}) {
    for (long long c = -k; c <= k; ++c) {
      if (k * k + 2 * c + 1 < 1) continue;
      for (Direction dir : {Direction::FromBelow, Direction::FromAbove}) {
        if (dir == Direction::FromBelow && k < 2) continue;
        long long threshold =
            std::max({monotone_threshold(c, dir), k, std::llabs(c) + 1, 3ll});
        Rational conj = Rational(k) + Rational(c, k);
        for (long long b : {threshold, threshold + 1, threshold * 3, threshold * 10}) {
          auto [bound, step] = step_two_bound(k, c, b, dir);
          Rational residual = bound - conj;
          CHECK(residual * Rational(b) < Rational(1));
          (void)step;
        }
      }
    }
  }
}

TEST_CASE("limit_bound: schedule bounds decrease toward the claim") {
  BoundCertificate cert = limit_bound(3, 1, Direction::FromBelow, {10, 100, 1000});
  REQUIRE(cert.has_limit_claim());
  const LimitClaim& claim = cert.limit_claim();
  CHECK(claim.value == Rational(10, 3));
  REQUIRE(claim.witness.size() == 3);
  CHECK(claim.witness[0].second - claim.value == Rational(11, 297));
  CHECK(claim.witness[1].second - claim.value == Rational(101, 29997));
  CHECK(claim.witness[2].second - claim.value == Rational(1001, 2999997));
  CHECK(check_certificate(cert).ok);

  BoundCertificate c2 = limit_bound(2, 0, Direction::FromBelow, {2, 4, 8});
  CHECK(c2.limit_claim().value == Rational(2));
  const auto& w = c2.limit_claim().witness;
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i].second < w[i - 1].second);
  CHECK(check_certificate(c2).ok);

  BoundCertificate c3 = limit_bound(5, -2, Direction::FromAbove, {10, 100, 1000});
  CHECK(c3.limit_claim().value == Rational(23, 5));
  for (const auto& [b, bound] : c3.limit_claim().witness)
    CHECK(bound - Rational(23, 5) == Rational(b + 2, 5 * (b + 1) * (b + 1)));
  CHECK(check_certificate(c3).ok);

  CHECK_THROWS_AS(limit_bound(3, 1, Direction::FromBelow, {10, 100}), std::invalid_argument);
  CHECK_THROWS_AS(limit_bound(3, 1, Direction::FromBelow, {10, 100, 50}), std::invalid_argument);
}

TEST_CASE("chain_derive") {
  BoundCertificate up = chain_derive(0, 1, 3, {10, 100, 1000});
  CHECK(up.has_limit_claim());
  CHECK(up.limit_claim().value == Rational(10, 3));
  CHECK(up.final_bound == Rational(10, 3));
  CHECK(check_certificate(up).ok);

  BoundCertificate trivial = chain_derive(0, 0, 4, {10, 100, 1000});
  CHECK(trivial.steps.empty());
  CHECK(trivial.final_bound == Rational(4));
  CHECK(check_certificate(trivial).ok);

  BoundCertificate down = chain_derive(2, -1, 5, {10, 100, 1000});
  CHECK(down.limits.size() == 3);  // hops to c=1, c=0, c=-1, all from above
  for (const LimitClaim& claim : down.limits) CHECK(claim.direction == Direction::FromAbove);
  CHECK(down.final_bound == Rational(24, 5));
  CHECK(check_certificate(down).ok);

  CHECK_THROWS_AS(chain_derive(9, 0, 3, {10, 100, 1000}), std::invalid_argument);
  CHECK_THROWS_AS(chain_derive(0, 5, 3, {10, 100, 1000}), std::invalid_argument);
}

TEST_CASE("check_certificate catches tampering") {
  BoundCertificate cert = limit_bound(3, 1, Direction::FromBelow, {10, 100, 1000});
  REQUIRE(check_certificate(cert).ok);

  BoundCertificate perturbed = cert;
  perturbed.final_bound += Rational(1, 1000000000);
  CertificateCheck bad = check_certificate(perturbed);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.issues.empty());

  BoundCertificate broken = cert;
  broken.steps[0].a = broken.steps[0].b + 1;
  CHECK_FALSE(check_certificate(broken).ok);

  BoundCertificate wrong_premise = cert;
  wrong_premise.steps[0].premise_value += Rational(1, 7);
  CHECK_FALSE(check_certificate(wrong_premise).ok);
}

TEST_CASE("hand-built step with a > b fails the check") {
  BoundCertificate cert;
  cert.k = 3;
  cert.c = 1;
  cert.assumed_c = 0;
  BoundStep s;
  s.n = 12;
  s.a = 5;
  s.b = 3;
  s.premise_n = 3 * 3 - 5 * 5 + 12;
  s.premise_value = Rational(1);
  s.resulting_bound = Rational(1);
  cert.steps.push_back(s);
  cert.final_bound = Rational(1);
  CHECK_FALSE(check_certificate(cert).ok);
}

TEST_CASE("limit claims stay consistent with the constructions") {
  for (long long k : {3, 5, 10}) {
    for (long long c : {-2ll, -1ll, 1ll, 2ll}) {
      if (std::llabs(c) > k - 1) continue;
      Direction dir = c > 0 ? Direction::FromBelow : Direction::FromAbove;
      BoundCertificate cert = limit_bound(k, c, dir, {10, 100, 1000});
      long long n = k * k + 2 * c + 1;
      CHECK(cert.limit_claim().value == conjectured_value(n));
      Rational built = side_sum(construct_conjectured(n));
      for (const auto& [b, bound] : cert.limit_claim().witness) CHECK(bound > built);
    }
  }
}

TEST_CASE("certificate integrity survives serialization") {
  BoundCertificate cert = chain_derive(0, 2, 6, {10, 100, 1000});
  REQUIRE(check_certificate(cert).ok);
  std::string text = io::serialize_certificate(cert);
  BoundCertificate back = io::parse_certificate(text);
  CHECK(check_certificate(back).ok);
  CHECK(io::serialize_certificate(back) == text);
}

TEST_CASE("epsilon diagnostic") {
  std::vector<EpsilonRecord> records;
  records.push_back({4, 0, Rational::parse_number("4.1")});
  records.push_back({2, 0, Rational::parse_number("1.98")});
  records.push_back({3, 1, Rational(10, 3)});
  auto out = epsilon_diagnostic(records);
  REQUIRE(out.size() == 3);
  CHECK(out[0].k == 2);
  CHECK(out[0].epsilon() == Rational(-1, 50));
  CHECK(out[0].k_epsilon() == Rational(-1, 25));
  CHECK_FALSE(out[0].above_conjecture());
  CHECK(out[1].k == 3);
  CHECK(out[1].epsilon() == Rational(0));
  CHECK(out[1].k_epsilon() == Rational(0));
  CHECK(out[2].k == 4);
  CHECK(out[2].epsilon() == Rational(1, 10));
  CHECK(out[2].k_epsilon() == Rational(2, 5));
  CHECK(out[2].above_conjecture());
}
