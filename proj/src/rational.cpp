#include "sqpack/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sqpack {

namespace {

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  long long nbits = static_cast<long long>(boost::multiprecision::msb(n));
  long long dbits = static_cast<long long>(boost::multiprecision::msb(den_));
  // Scale so the quotient keeps ~64 significant bits even when num/den are
  // wildly different sizes.
  long long shift = 64 + dbits - nbits;
  if (shift < 0) shift = 0;
  BigInt q = (n << static_cast<unsigned>(shift)) / den_;
  double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return num_ < 0 ? -d : d;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal_string(int fraction_digits) const {
  if (fraction_digits < 0) throw std::invalid_argument("negative digit count");
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  BigInt scale = pow10(fraction_digits);
  // round half up, exactly
  BigInt q = (2 * n * scale + den_) / (2 * den_);
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= fraction_digits)
    digits.insert(0, fraction_digits + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - fraction_digits);
  std::string frac = digits.substr(digits.size() - fraction_digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (num_ < 0 && q != 0) out.insert(0, 1, '-');
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  std::string_view num = s, den;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den))
      throw std::invalid_argument("bad rational \"" + std::string(text) + "\": malformed denominator");
  }
  if (!all_digits(num))
    throw std::invalid_argument("bad rational \"" + std::string(text) + "\": malformed numerator");
  BigInt n = BigInt(std::string(num));
  BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (d == 0)
    throw std::invalid_argument("bad rational \"" + std::string(text) + "\": denominator is zero");
  if (neg) n = -n;
  return Rational(std::move(n), std::move(d));
}

Rational Rational::parse_number(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse(text);
  std::string_view head = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && head.front() == '-') {
    neg = true;
    head.remove_prefix(1);
  }
  if ((head.empty() && frac.empty()) || (!head.empty() && !all_digits(head)) || (!frac.empty() && !all_digits(frac)))
    throw std::invalid_argument("bad number \"" + std::string(text) + "\"");
  BigInt n = head.empty() ? BigInt(0) : BigInt(std::string(head));
  BigInt scale = pow10(static_cast<int>(frac.size()));
  n *= scale;
  if (!frac.empty()) n += BigInt(std::string(frac));
  if (neg) n = -n;
  return Rational(std::move(n), std::move(scale));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("from_double: not finite");
  if (v == 0.0) return Rational();
  int exp = 0;
  double m = std::frexp(v, &exp);  // v = m * 2^exp, 0.5 <= |m| < 1
  long long mant = std::llround(std::ldexp(m, 53));  // exact, |mant| < 2^53
  exp -= 53;
  if (exp >= 0) return Rational(BigInt(mant) << exp);
  return Rational(BigInt(mant), BigInt(1) << -exp);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational best_rational_approx(double v, long long max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("best_rational_approx: bad limit");
  if (!std::isfinite(v)) throw std::invalid_argument("best_rational_approx: not finite");
  bool neg = v < 0;
  long double x = neg ? -static_cast<long double>(v) : static_cast<long double>(v);
  if (x > 9e17l) throw std::invalid_argument("best_rational_approx: value out of range");

  BigInt pm1 = 1, qm1 = 0;
  BigInt p = static_cast<long long>(std::floor(static_cast<double>(x))), q = 1;
  long double frac = x - std::floor(static_cast<double>(x));
  for (int it = 0; it < 64 && frac > 1e-18l; ++it) {
    long double inv = 1.0l / frac;
    long double fl = floorl(inv);
    if (fl > 9e17l) break;
    long long a = static_cast<long long>(fl);
    BigInt np = a * p + pm1;
    BigInt nq = a * q + qm1;
    if (nq > max_denominator) break;
    pm1 = p;
    qm1 = q;
    p = np;
    q = nq;
    frac = inv - fl;
  }
  if (neg) p = -p;
  return Rational(std::move(p), std::move(q));
}

int floor_log10_abs(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("floor_log10_abs: zero");
  BigInt n = r.numerator() < 0 ? BigInt(-r.numerator()) : r.numerator();
  const BigInt& d = r.denominator();
  int e = 0;
  BigInt lhs = n, rhs = d;  // compare n/d against 10^e by scaling
  if (lhs >= rhs) {
    while (lhs >= 10 * rhs) {
      rhs *= 10;
      ++e;
    }
  } else {
    while (lhs < rhs) {
      lhs *= 10;
      --e;
    }
  }
  return e;
}

}  // namespace sqpack
