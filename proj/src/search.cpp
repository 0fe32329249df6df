#include "sqpack/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "sqpack/construct.hpp"

namespace sqpack {

namespace {

constexpr double kMinSide = 1e-3;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform doubles straight off the engine output; identical on every
// platform, unlike the std distributions.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t s) : engine(s) {}
  double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * unit() - 1.0; }
  std::uint64_t below(std::uint64_t m) { return engine() % m; }
};

struct State {
  std::vector<double> x, y, s;
  explicit State(std::size_t n) : x(n), y(n), s(n) {}
  std::size_t size() const { return x.size(); }
  double sum() const { return std::accumulate(s.begin(), s.end(), 0.0); }
};

bool pair_overlaps(const State& st, std::size_t i, std::size_t j) {
  return st.x[i] < st.x[j] + st.s[j] && st.x[j] < st.x[i] + st.s[i] &&
         st.y[i] < st.y[j] + st.s[j] && st.y[j] < st.y[i] + st.s[i];
}

bool state_feasible(const State& st) {
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = i + 1; j < st.size(); ++j)
      if (pair_overlaps(st, i, j)) return false;
  return true;
}

// Open-intersection area; the soft penalty is quadratic in the penetration.
double pair_penalty(const State& st, std::size_t i, std::size_t j) {
  double w = std::min(st.x[i] + st.s[i], st.x[j] + st.s[j]) - std::max(st.x[i], st.x[j]);
  if (w <= 0.0) return 0.0;
  double h = std::min(st.y[i] + st.s[i], st.y[j] + st.s[j]) - std::max(st.y[i], st.y[j]);
  if (h <= 0.0) return 0.0;
  return w * h;
}

double square_penalty(const State& st, std::size_t i) {
  double total = 0.0;
  for (std::size_t j = 0; j < st.size(); ++j)
    if (j != i) total += pair_penalty(st, i, j);
  return total;
}

// Uniform float shrink mirroring the exact repair in snap_to_rational; gets
// the state close to feasible so the polish phase has something to work with.
void float_repair(State& st) {
  double t = 1.0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (st.x[i] + st.s[i] > 1.0) t = std::min(t, (1.0 - st.x[i]) / st.s[i]);
    if (st.y[i] + st.s[i] > 1.0) t = std::min(t, (1.0 - st.y[i]) / st.s[i]);
  }
  for (std::size_t i = 0; i < st.size(); ++i) {
    for (std::size_t j = i + 1; j < st.size(); ++j) {
      if (!pair_overlaps(st, i, j)) continue;
      double tx = 0.0, ty = 0.0;
      if (st.x[i] != st.x[j]) {
        std::size_t lo = st.x[i] < st.x[j] ? i : j;
        std::size_t hi = st.x[i] < st.x[j] ? j : i;
        tx = (st.x[hi] - st.x[lo]) / st.s[lo];
      }
      if (st.y[i] != st.y[j]) {
        std::size_t lo = st.y[i] < st.y[j] ? i : j;
        std::size_t hi = st.y[i] < st.y[j] ? j : i;
        ty = (st.y[hi] - st.y[lo]) / st.s[lo];
      }
      t = std::min(t, std::max(tx, ty));
    }
  }
  if (t <= 0.0) return;  // coincident corners; leave it to the exact stage
  if (t < 1.0)
    for (std::size_t i = 0; i < st.size(); ++i) st.s[i] *= t;
}

// Largest side square i can take with its corner fixed, given the box and
// every square whose far corner pokes into the growth quadrant.
double max_growth(const State& st, std::size_t i) {
  double cap = std::min(1.0 - st.x[i], 1.0 - st.y[i]);
  for (std::size_t j = 0; j < st.size(); ++j) {
    if (j == i) continue;
    if (st.x[j] + st.s[j] > st.x[i] && st.y[j] + st.s[j] > st.y[i]) {
      double lim = std::max(st.x[j] - st.x[i], st.y[j] - st.y[i]);
      cap = std::min(cap, lim);
    }
  }
  return std::max(cap, st.s[i]);  // never below the current (feasible) side
}

State initial_state(std::size_t n, Rng& rng) {
  State st(n);
  auto g = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<std::size_t> cells(g * g);
  std::iota(cells.begin(), cells.end(), 0);
  for (std::size_t i = cells.size(); i > 1; --i)
    std::swap(cells[i - 1], cells[rng.below(i)]);
  double cell = 1.0 / static_cast<double>(g);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ci = cells[i] % g, cj = cells[i] / g;
    double side = cell * (0.55 + 0.35 * rng.unit());
    double room = cell - side;
    st.x[i] = static_cast<double>(ci) * cell + room * rng.unit();
    st.y[i] = static_cast<double>(cj) * cell + room * rng.unit();
    st.s[i] = side;
  }
  return st;
}

// Deterministic float-space cleanup: slide everything left and down against
// its neighbors, then grow sides to their caps. Sliding copies neighbor edge
// values bit-for-bit, so touching squares share identical doubles and later
// snap to identical rationals.
void polish(State& st, int rounds) {
  const std::size_t n = st.size();
  std::vector<std::size_t> order(n);
  for (int round = 0; round < rounds; ++round) {
    bool changed = false;

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return st.x[a] != st.x[b] ? st.x[a] < st.x[b] : a < b;
    });
    for (std::size_t i : order) {
      double bound = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        bool y_overlap = st.y[i] < st.y[j] + st.s[j] && st.y[j] < st.y[i] + st.s[i];
        double edge = st.x[j] + st.s[j];
        if (y_overlap && edge <= st.x[i]) bound = std::max(bound, edge);
      }
      if (bound < st.x[i]) {
        st.x[i] = bound;
        changed = true;
      }
    }

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return st.y[a] != st.y[b] ? st.y[a] < st.y[b] : a < b;
    });
    for (std::size_t i : order) {
      double bound = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        bool x_overlap = st.x[i] < st.x[j] + st.s[j] && st.x[j] < st.x[i] + st.s[i];
        double edge = st.y[j] + st.s[j];
        if (x_overlap && edge <= st.y[i]) bound = std::max(bound, edge);
      }
      if (bound < st.y[i]) {
        st.y[i] = bound;
        changed = true;
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      double cap = max_growth(st, i);
      if (cap > st.s[i]) {
        st.s[i] = cap;
        changed = true;
      }
    }

    if (!changed) break;
  }
}

struct RestartOutcome {
  FloatPacking candidate;
  double float_sum = 0.0;
};

RestartOutcome run_restart(const SearchConfig& cfg, int restart) {
  Rng rng(splitmix64(cfg.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(restart + 1)));
  const auto n = static_cast<std::size_t>(cfg.n);
  State st = initial_state(n, rng);

  State best = st;
  double best_sum = st.sum();

  double temperature = cfg.initial_temperature;
  for (int iter = 0; iter < cfg.iterations_per_restart; ++iter, temperature *= cfg.cooling_rate) {
    double tfrac = std::max(temperature / cfg.initial_temperature, 0.02);
    double amp = cfg.move_scale * tfrac;
    std::size_t i = static_cast<std::size_t>(rng.below(n));
    std::uint64_t kind = rng.below(100);

    if (kind < 40) {  // jiggle
      double ox = st.x[i], oy = st.y[i];
      st.x[i] = std::clamp(ox + amp * rng.symmetric(), 0.0, 1.0 - st.s[i]);
      st.y[i] = std::clamp(oy + amp * rng.symmetric(), 0.0, 1.0 - st.s[i]);
      if (!placement_free(st, i)) {
        st.x[i] = ox;
        st.y[i] = oy;
      }
    } else if (kind < 65) {  // resize
      double os = st.s[i];
      double cap = std::min(1.0 - st.x[i], 1.0 - st.y[i]);
      double ns = std::clamp(os + 0.5 * amp * rng.symmetric(), kMinSide, cap);
      st.s[i] = ns;
      if (ns > os && !placement_free(st, i)) {
        st.s[i] = os;
      } else if (ns < os) {
        double delta = ns - os;
        if (rng.unit() >= std::exp(delta / std::max(temperature, 1e-9))) st.s[i] = os;
      }
    } else if (kind < 85) {  // grow to the cap; never loses feasibility
      st.s[i] = max_growth(st, i);
    } else {  // teleport
      double ox = st.x[i], oy = st.y[i];
      st.x[i] = rng.unit() * (1.0 - st.s[i]);
      st.y[i] = rng.unit() * (1.0 - st.s[i]);
      if (!placement_free(st, i)) {
        st.x[i] = ox;
        st.y[i] = oy;
      }
    }

    double sum = st.sum();
    if (sum > best_sum) {
      best_sum = sum;
      best = st;
    }
  }

  polish(st, 80);
  polish(best, 80);
  const State& winner = st.sum() > best.sum() ? st : best;

  RestartOutcome out;
  out.candidate.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.candidate.push_back({winner.x[i], winner.y[i], winner.s[i]});
  out.float_sum = winner.sum();
  return out;
}

void validate(const SearchConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("search: n must be positive");
  if (cfg.restarts < 1) throw std::invalid_argument("search: restarts must be positive");
  if (cfg.iterations_per_restart < 1)
    throw std::invalid_argument("search: iterations_per_restart must be positive");
  if (!(cfg.initial_temperature > 0))
    throw std::invalid_argument("search: initial_temperature must be positive");
  if (!(cfg.cooling_rate > 0 && cfg.cooling_rate < 1))
    throw std::invalid_argument("search: cooling_rate must be in (0,1)");
  if (!(cfg.move_scale > 0)) throw std::invalid_argument("search: move_scale must be positive");
  if (cfg.snap_denominator_limit < 1)
    throw std::invalid_argument("search: snap_denominator_limit must be positive");
}

}  // namespace

std::optional<Packing> snap_to_rational(const FloatPacking& candidate,
                                        long long denominator_limit) {
  if (denominator_limit < 1)
    throw std::invalid_argument("snap_to_rational: bad denominator limit");

  Packing p;
  p.squares.reserve(candidate.size());
  for (const FloatSquare& fs : candidate) {
    Square sq;
    sq.x = best_rational_approx(std::clamp(fs.x, 0.0, 1.0), denominator_limit);
    sq.y = best_rational_approx(std::clamp(fs.y, 0.0, 1.0), denominator_limit);
    sq.side = best_rational_approx(std::clamp(fs.side, 0.0, 1.0), denominator_limit);
    if (sq.side.sign() <= 0) return std::nullopt;
    p.squares.push_back(std::move(sq));
  }

  // Minimal uniform side shrink: every violated constraint caps the factor.
  const Rational one(1);
  Rational t = one;
  auto cap = [&t](const Rational& limit) {
    if (limit < t) t = limit;
  };
  for (const Square& sq : p.squares) {
    if (sq.x_hi() > one) cap((one - sq.x) / sq.side);
    if (sq.y_hi() > one) cap((one - sq.y) / sq.side);
  }
  for (std::size_t i = 0; i < p.squares.size(); ++i) {
    for (std::size_t j = i + 1; j < p.squares.size(); ++j) {
      const Square& a = p.squares[i];
      const Square& b = p.squares[j];
      if (!squares_overlap(a, b)) continue;
      Rational tx(0), ty(0);
      if (a.x != b.x) {
        const Square& lo = a.x < b.x ? a : b;
        const Square& hi = a.x < b.x ? b : a;
        tx = (hi.x - lo.x) / lo.side;
      }
      if (a.y != b.y) {
        const Square& lo = a.y < b.y ? a : b;
        const Square& hi = a.y < b.y ? b : a;
        ty = (hi.y - lo.y) / lo.side;
      }
      cap(std::max(tx, ty));
    }
  }

  if (t.sign() <= 0) return std::nullopt;
  if (t < one)
    for (Square& sq : p.squares) sq.side *= t;
  if (!verify(p).valid) return std::nullopt;
  return p;
}

SearchResult search(const SearchConfig& cfg) {
  validate(cfg);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::min<unsigned>(std::max(hw, 1u), static_cast<unsigned>(cfg.restarts));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int r; (r = next.fetch_add(1)) < cfg.restarts;)
          outcomes[static_cast<std::size_t>(r)] = run_restart(cfg, r);
      });
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  Rational conjectured = conjectured_value(cfg.n);
  std::optional<Rational> best_exact;
  for (int r = 0; r < cfg.restarts; ++r) {
    const RestartOutcome& out = outcomes[static_cast<std::size_t>(r)];
    auto snapped = snap_to_rational(out.candidate, cfg.snap_denominator_limit);
    if (snapped) {
      Rational sum = side_sum(*snapped);
      if (!best_exact || sum > *best_exact) {
        best_exact = sum;
        snapped->label = "search n=" + std::to_string(cfg.n) +
                         " seed=" + std::to_string(cfg.seed) +
                         " restart=" + std::to_string(r);
        result.best_packing = std::move(*snapped);
        result.best_float_sum = out.float_sum;
        result.best_restart = r;
      }
    } else if (!best_exact && out.float_sum > result.best_float_sum) {
      result.best_float_sum = out.float_sum;  // float-only fallback
    }
  }

  if (best_exact) {
    result.exact_sum = *best_exact;
    result.conjecture_gap = conjectured - *best_exact;
    result.counterexample_flag = *best_exact > conjectured;
  }
  return result;
}

bool counterexample_check(const SearchResult& result, long long n) {
  if (!result.best_packing)
    throw std::invalid_argument("counterexample_check: no exact packing present");
  return side_sum(*result.best_packing) > conjectured_value(n);
}

}  // namespace sqpack
