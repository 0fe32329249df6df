#include "sqpack/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqpack {

Rational side_sum(const Packing& p) {
  Rational sum;
  for (const Square& s : p.squares) sum += s.side;
  return sum;
}

bool squares_overlap(const Square& a, const Square& b) {
  if (a.side.sign() <= 0 || b.side.sign() <= 0) return false;  // no interior
  return a.x < b.x_hi() && b.x < a.x_hi() && a.y < b.y_hi() && b.y < a.y_hi();
}

namespace {

// One edge coordinate with an int64 mirror for the common small-denominator
// case; cross-multiplication then stays out of bignum arithmetic.
struct Edge {
  Rational r;
  long long n = 0;
  long long d = 1;
  bool small = false;
};

constexpr long long kSmallLimit = 1ll << 31;

bool to_small(const BigInt& v, long long& out) {
  if (v < -kSmallLimit || v > kSmallLimit) return false;
  out = v.convert_to<long long>();
  return true;
}

Edge make_edge(Rational r) {
  Edge e;
  e.small = to_small(r.numerator(), e.n) && to_small(r.denominator(), e.d);
  e.r = std::move(r);
  return e;
}

bool edge_less(const Edge& a, const Edge& b) {
  if (a.small && b.small) return a.n * b.d < b.n * a.d;
  return a.r < b.r;
}

struct Entry {
  Edge xlo, xhi, ylo, yhi;
  bool positive_side = false;
};

}  // namespace

VerificationReport verify(const Packing& p, const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t n = p.squares.size();

  std::vector<Entry> entries(n);
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Square& s = p.squares[i];
    Entry& e = entries[i];
    e.positive_side = s.side.sign() > 0;
    e.xlo = make_edge(s.x);
    e.ylo = make_edge(s.y);
    e.xhi = make_edge(s.x_hi());
    e.yhi = make_edge(s.y_hi());

    if (!e.positive_side) {
      report.violations.push_back({ViolationKind::NonpositiveSide, i, i, s.x, s.y});
      continue;
    }
    if (s.x < zero || s.y < zero)
      report.violations.push_back({ViolationKind::Containment, i, i, s.x, s.y});
    else if (e.xhi.r > one || e.yhi.r > one)
      report.violations.push_back({ViolationKind::Containment, i, i, e.xhi.r, e.yhi.r});
  }

  auto overlaps = [&](std::size_t i, std::size_t j) {
    const Entry& a = entries[i];
    const Entry& b = entries[j];
    return edge_less(a.xlo, b.xhi) && edge_less(b.xlo, a.xhi) &&
           edge_less(a.ylo, b.yhi) && edge_less(b.ylo, a.yhi);
  };

  std::vector<std::pair<std::size_t, std::size_t>> overlap_pairs;
  if (n <= options.pairwise_threshold) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!entries[i].positive_side) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!entries[j].positive_side) continue;
        if (overlaps(i, j)) overlap_pairs.emplace_back(i, j);
      }
    }
  } else {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (entries[i].positive_side) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (edge_less(entries[a].xlo, entries[b].xlo)) return true;
      if (edge_less(entries[b].xlo, entries[a].xlo)) return false;
      return a < b;
    });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      std::size_t i = order[oi];
      for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
        std::size_t j = order[oj];
        if (!edge_less(entries[j].xlo, entries[i].xhi)) break;  // sorted: no later j can overlap in x
        if (overlaps(i, j)) overlap_pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
    std::sort(overlap_pairs.begin(), overlap_pairs.end());
  }

  const Rational half(1, 2);
  for (auto [i, j] : overlap_pairs) {
    const Entry& a = entries[i];
    const Entry& b = entries[j];
    Rational wx = (std::max(a.xlo.r, b.xlo.r) + std::min(a.xhi.r, b.xhi.r)) * half;
    Rational wy = (std::max(a.ylo.r, b.ylo.r) + std::min(a.yhi.r, b.yhi.r)) * half;
    report.violations.push_back({ViolationKind::Overlap, i, j, std::move(wx), std::move(wy)});
  }

  report.valid = report.violations.empty();
  return report;
}

std::vector<Square> scale_translate(const Packing& p, const Rational& factor,
                                    const Rational& dx, const Rational& dy) {
  if (factor.sign() <= 0)
    throw std::invalid_argument("scale_translate: factor must be positive");
  std::vector<Square> out;
  out.reserve(p.squares.size());
  for (const Square& s : p.squares)
    out.push_back({factor * s.x + dx, factor * s.y + dy, factor * s.side});
  return out;
}

}  // namespace sqpack
