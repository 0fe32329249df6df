#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace sqpack {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers. Always normalized:
/// denominator > 0 and gcd(|numerator|, denominator) == 1. Comparisons go
/// through cross-multiplication; nothing in this class ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // implicit on purpose
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  /// Exact fixed-point rendering with the given number of fraction digits,
  /// round-half-up, trailing zeros trimmed.
  std::string to_decimal_string(int fraction_digits) const;

  /// Strict grammar: optional minus, digits, optional "/" digits. Throws
  /// std::invalid_argument on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  /// Like parse(), but also accepts decimal notation ("1.98" -> 99/50).
  static Rational parse_number(std::string_view text);

  /// Exact value of the double (binary expansion). Throws on non-finite input.
  static Rational from_double(double v);

 private:
  void normalize();
  BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Best rational approximation of v with denominator <= max_denominator,
/// taken from the continued-fraction convergents of v.
Rational best_rational_approx(double v, long long max_denominator);

/// Largest e with 10^e <= |r|. Requires r nonzero.
int floor_log10_abs(const Rational& r);

}  // namespace sqpack
