#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace freemoments {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// and every arithmetic result is materialized immediately, so two Rationals
/// compare equal exactly when their canonical forms agree.
class Rational
{
public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) // NOLINT(google-explicit-constructor)
    : q_(static_cast<long>(v))
  {
  }
  template <std::unsigned_integral I>
  Rational(I v) // NOLINT(google-explicit-constructor)
    : q_(static_cast<unsigned long>(v))
  {
  }
  Rational(BigInt const &v) // NOLINT(google-explicit-constructor)
    : q_(v)
  {
  }
  /// num/den; throws InvalidParameter when den == 0.
  Rational(BigInt const &num, BigInt const &den);

  /// Parses "p/q", "p", with an optional leading '-'. Throws ParseError.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(Rational const &o) { q_ += o.q_; return *this; }
  Rational &operator-=(Rational const &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(Rational const &o) { q_ *= o.q_; return *this; }
  /// Throws InvalidParameter on division by zero.
  Rational &operator/=(Rational const &o);

  friend Rational operator+(Rational a, Rational const &b) { return a += b; }
  friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

  friend bool operator==(Rational const &a, Rational const &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
  {
    int const c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  mpq_class const &raw() const { return q_; }

private:
  explicit Rational(mpq_class v)
    : q_(std::move(v))
  {
    q_.canonicalize();
  }
  mpq_class q_;
};

Rational abs(Rational const &r);
/// r^k for integer k >= 0; k < 0 inverts (throws on zero base).
Rational pow(Rational const &r, long k);

std::ostream &operator<<(std::ostream &os, Rational const &r);

/// C(n, k) via the multiplicative formula; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
Rational pochhammer(Rational const &a, long n);

} // namespace freemoments
