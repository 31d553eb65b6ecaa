#include <doctest.h>

#include <random>
#include <sstream>

#include "freemoments/errors.hpp"
#include "freemoments/rational.hpp"

using namespace freemoments;

namespace {

// Pascal's triangle, independent of the multiplicative formula.
std::vector<std::vector<BigInt>> pascal(long rows)
{
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (long n = 0; n <= rows; ++n) {
    t[n].resize(n + 1);
    t[n][0] = t[n][n] = 1;
    for (long k = 1; k < n; ++k) { t[n][k] = t[n - 1][k - 1] + t[n - 1][k]; }
  }
  return t;
}

Rational random_rational(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
  return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rationals are canonical")
{
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(BigInt(8), BigInt(4)).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidParameter);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidParameter);
}

TEST_CASE("rational parsing round-trips printed values")
{
  CHECK(Rational::parse("27/4") == Rational(27, 4));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("3x"), ParseError);
  try {
    Rational::parse("12/a");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.position == 3);
  }

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto const r = random_rational(rng) * random_rational(rng);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("pow")
{
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2), -3) == Rational(1, 8));
  CHECK(pow(Rational(5, 7), 0) == Rational(1));
}

TEST_CASE("binomial")
{
  CHECK(binomial(6, 2) == 15);
  // 2 C(6,2) / 3 is the third listed tree total
  CHECK(Rational(binomial(6, 2) * 2, 3) == Rational(10));
  CHECK(binomial(30, 10) == 30045015);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);

  auto const t = pascal(150);
  for (long n = 0; n <= 150; ++n) {
    for (long k = 0; k <= n; ++k) { REQUIRE(binomial(n, k) == t[n][k]); }
  }
  for (long n = 1; n <= 100; ++n) {
    for (long k = 1; k <= n; ++k) { REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)); }
  }
}

TEST_CASE("tree totals 2 C(3n,n)/(n+1)")
{
  long const expected[] = {2, 3, 10, 42, 198, 1001, 5304, 29070, 163438};
  for (long n = 0; n < 9; ++n) { CHECK(Rational(binomial(3 * n, n) * 2, n + 1) == Rational(expected[n])); }
}

TEST_CASE("pochhammer")
{
  CHECK(pochhammer(Rational(7, 5), 0) == Rational(1));
  CHECK(pochhammer(Rational(-1, 2), 2) == Rational(-1, 4));
  CHECK(pochhammer(Rational(1, 3), 3) == Rational(28, 27));
  CHECK(pochhammer(Rational(1), 5) == Rational(120));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> len(0, 20);
  for (int i = 0; i < 100; ++i) {
    auto const a = random_rational(rng);
    long const m = len(rng), n = len(rng);
    REQUIRE(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
  }
}

TEST_CASE("stream output")
{
  std::ostringstream os;
  os << Rational(-7, 21);
  CHECK(os.str() == "-1/3");
}
