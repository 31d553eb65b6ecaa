#include "freemoments/rational.hpp"

#include "freemoments/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace freemoments {

Rational::Rational(BigInt const &num, BigInt const &den)
{
  if (den == 0) { throw InvalidParameter("rational with zero denominator"); }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset)
{
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) { throw ParseError("expected digits", offset + i); }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) { throw ParseError("unexpected character", offset + j); }
  }
  BigInt v(std::string(text.substr(i)), 10);
  return negative ? BigInt(-v) : v;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
  if (text.empty()) { throw ParseError("empty rational literal", 0); }
  auto const slash = text.find('/');
  if (slash == std::string_view::npos) { return Rational(parse_integer(text, 0)); }
  BigInt const num = parse_integer(text.substr(0, slash), 0);
  auto const den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned", slash + 1);
  }
  BigInt const den = parse_integer(den_text, slash + 1);
  if (den == 0) { throw ParseError("zero denominator", slash + 1); }
  return Rational(num, den);
}

std::string Rational::str() const { return q_.get_str(10); }

Rational &Rational::operator/=(Rational const &o)
{
  if (o.is_zero()) { throw InvalidParameter("division by zero"); }
  q_ /= o.q_;
  return *this;
}

Rational abs(Rational const &r) { return r.sign() < 0 ? -r : r; }

Rational pow(Rational const &r, long k)
{
  if (k < 0) { return Rational(1) / pow(r, -k); }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, Rational const &r) { return os << r.str(); }

BigInt binomial(long n, long k)
{
  if (k < 0 || k > n) { return 0; }
  k = std::min(k, n - k);
  BigInt r = 1;
  // After step i, r == C(n-k+i, i), so each division is exact.
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Rational pochhammer(Rational const &a, long n)
{
  Rational r = 1;
  for (long i = 0; i < n; ++i) { r *= a + Rational(i); }
  return r;
}

} // namespace freemoments
