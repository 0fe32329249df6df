#include "sqpack/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqpack {

namespace {

long long isqrt_floor(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (__int128)r * r > n) --r;
  while ((__int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Decomposition decompose(long long n) {
  if (n <= 0) throw std::invalid_argument("decompose: n must be positive");
  long long k0 = isqrt_floor(n);
  if (k0 * k0 == n) return {n, k0, 0, true};
  // n - k^2 must be odd; k0 and k0+1 have opposite parity, so exactly one fits
  long long k = ((n - k0 * k0) % 2 != 0) ? k0 : k0 + 1;
  long long c = (n - k * k - 1) / 2;
  return {n, k, c, false};
}

Rational conjectured_value(long long n) {
  Decomposition d = decompose(n);
  if (d.perfect_square) return Rational(d.k);
  return Rational(d.k) + Rational(d.c, d.k);
}

Packing grid(long long b) {
  if (b <= 0) throw std::invalid_argument("grid: b must be positive");
  Packing p;
  p.label = "grid(" + std::to_string(b) + ")";
  p.squares.reserve(static_cast<std::size_t>(b * b));
  Rational side(1, b);
  for (long long j = 0; j < b; ++j)
    for (long long i = 0; i < b; ++i)
      p.squares.push_back({Rational(i, b), Rational(j, b), side});
  return p;
}

Packing substitute(long long b, long long a, long long block_col,
                   long long block_row, const Packing& inner) {
  if (b <= 0 || a <= 0 || a > b)
    throw std::invalid_argument("substitute: need 1 <= a <= b");
  if (block_col < 0 || block_row < 0 || block_col + a > b || block_row + a > b)
    throw std::invalid_argument("substitute: block out of range");
  if (!verify(inner).valid)
    throw std::invalid_argument("substitute: inner packing is invalid");

  Packing out;
  out.label = "substitute(b=" + std::to_string(b) + ",a=" + std::to_string(a) +
              ",block=(" + std::to_string(block_col) + "," + std::to_string(block_row) +
              ")) of " + (inner.label.empty() ? "inner" : inner.label);
  out.squares.reserve(static_cast<std::size_t>(b * b - a * a) + inner.squares.size());
  Rational side(1, b);
  for (long long j = 0; j < b; ++j) {
    for (long long i = 0; i < b; ++i) {
      bool vacated = i >= block_col && i < block_col + a && j >= block_row && j < block_row + a;
      if (!vacated) out.squares.push_back({Rational(i, b), Rational(j, b), side});
    }
  }
  auto mapped = scale_translate(inner, Rational(a, b), Rational(block_col, b),
                                Rational(block_row, b));
  out.squares.insert(out.squares.end(), mapped.begin(), mapped.end());
  return out;
}

Packing construct_conjectured(long long n, std::optional<Rational> slack) {
  Decomposition d = decompose(n);
  const bool needs_slack = !d.perfect_square && d.c == 0;
  if (!needs_slack && slack.has_value())
    throw std::invalid_argument("construct_conjectured: slack only applies when c == 0");

  if (d.perfect_square) {
    Packing p = grid(d.k);
    p.label = "conjectured n=" + std::to_string(n) + " (k=" + std::to_string(d.k) + ")";
    return p;
  }

  Packing p;
  if (d.c >= 1) {
    // vacate a c-by-c block and refill it with a (c+1)-grid: k^2+2c+1 squares
    p = substitute(d.k, d.c, d.k - d.c, d.k - d.c, grid(d.c + 1));
  } else if (d.c <= -1) {
    long long dd = -d.c;
    Packing inner;  // empty when dd == 1
    if (dd >= 2) inner = grid(dd - 1);
    p = substitute(d.k, dd, d.k - dd, d.k - dd, inner);
  } else {
    if (!slack.has_value() || slack->sign() <= 0 || *slack >= Rational(1, d.k))
      throw std::invalid_argument(
          "construct_conjectured: the k^2+1 family needs a slack in (0, 1/k)");
    // k^2-1 full cells; the top-right cell holds a shrunken cell plus a
    // second square of side slack/2 in the vacated strip. Sum is k - slack/2.
    const long long k = d.k;
    Rational cell(1, k);
    for (long long j = 0; j < k; ++j)
      for (long long i = 0; i < k; ++i)
        if (!(i == k - 1 && j == k - 1))
          p.squares.push_back({Rational(i, k), Rational(j, k), cell});
    Rational cx(k - 1, k), cy(k - 1, k);
    Rational big = cell - *slack;
    p.squares.push_back({cx, cy, big});
    p.squares.push_back({cx + big, cy, *slack * Rational(1, 2)});
  }
  p.label = "conjectured n=" + std::to_string(n) + " (k=" + std::to_string(d.k) +
            ", c=" + std::to_string(d.c) + ")";
  return p;
}

}  // namespace sqpack
