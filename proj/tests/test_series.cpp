#include <doctest.h>

#include <random>

#include "freemoments/measures.hpp"
#include "freemoments/series.hpp"
#include "freemoments/transforms.hpp"

using namespace freemoments;

namespace {

Series from_ints(std::initializer_list<long> c)
{
  std::vector<Rational> v;
  for (long x : c) { v.emplace_back(x); }
  return Series(std::move(v));
}

Series family_series(CoefficientFamily f, std::size_t order)
{
  Series s(order);
  for (std::size_t n = 0; n <= order; ++n) { s[n] = named_coefficient(f, static_cast<long>(n)); }
  return s;
}

Series random_series(std::mt19937_64 &rng, std::size_t order, bool zero_constant, bool unit_linear)
{
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  Series s(order);
  for (std::size_t i = 0; i <= order; ++i) { s[i] = Rational(num(rng), den(rng)); }
  if (zero_constant) { s[0] = 0; }
  if (unit_linear || s[1].is_zero()) { s[1] = Rational(num(rng) == 0 ? 1 : 2, den(rng)); }
  return s;
}

} // namespace

TEST_CASE("add, sub and scale")
{
  auto const a = from_ints({1, 1, 0, 0});
  auto const b = from_ints({1, -1, 0, 0});
  CHECK(a + b == from_ints({2, 0, 0, 0}));
  CHECK((a - b) == from_ints({0, 2, 0, 0}));
  // z/(1-z) times 2
  auto const geom = from_ints({0, 1, 1, 1, 1, 1});
  CHECK(geom * Rational(2) == from_ints({0, 2, 2, 2, 2, 2}));
  // orders meet at the minimum
  CHECK((a + geom).order() == 3);
}

TEST_CASE("mul")
{
  CHECK(from_ints({1, 1, 0}) * from_ints({1, -1, 0}) == from_ints({1, 0, -1}));
  auto const b3 = family_series(CoefficientFamily::b3, 4);
  CHECK(b3 * b3 == from_ints({1, 2, 7, 30, 143}));
  CHECK(family_series(CoefficientFamily::b3_squared, 4) == from_ints({1, 2, 7, 30, 143}));
}

TEST_CASE("reciprocal")
{
  CHECK(reciprocal(from_ints({1, -1, 0, 0, 0})) == from_ints({1, 1, 1, 1, 1}));
  CHECK(reciprocal(from_ints({1, 2, 0, 0})) == from_ints({1, -2, 4, -8}));
  CHECK(reciprocal(Series::constant(2, 0)) == Series::constant(Rational(1, 2), 0));
  CHECK_THROWS_AS(reciprocal(from_ints({0, 1})), ZeroConstantTerm);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = random_series(rng, 10, false, false);
    if (a[0].is_zero()) { a[0] = 1; }
    REQUIRE(a * reciprocal(a) == Series::one(10));
  }
}

TEST_CASE("compose")
{
  auto const f = from_ints({3, 1, 4, 1, 5});
  CHECK(compose(f, Series::identity(4)) == f);
  // 1/(1-w) at w = z + z^2 gives the Fibonacci numbers
  CHECK(compose(from_ints({1, 1, 1, 1, 1}), from_ints({0, 1, 1, 0, 0})) == from_ints({1, 1, 2, 3, 5}));
  CHECK_THROWS_AS(compose(f, from_ints({1, 1})), InnerConstantNonzero);

  // R(z M(z)) + 1 = M(z) for mu0
  std::size_t const n = 12;
  auto const s = moments(named(measure::Named::mu0), n);
  auto const m = moment_series(s);
  auto const r = r_transform(moments_to_cumulants(s));
  CHECK(compose(r, m.shifted_up().truncated(n)) + Series::one(n) == m);
}

TEST_CASE("comp_inverse")
{
  CHECK(comp_inverse(Series::identity(6)) == Series::identity(6));
  CHECK(comp_inverse(from_ints({0, 1, 1, 0, 0})) == from_ints({0, 1, -1, 2, -5}));
  auto m = moment_series(moments(marchenko_pastur(1), 4));
  m[0] = 0;
  CHECK(comp_inverse(m) == from_ints({0, 1, -2, 3, -4}));
  CHECK_THROWS_AS(comp_inverse(from_ints({1, 1, 0})), NotInvertible);
  CHECK_THROWS_AS(comp_inverse(from_ints({0, 0, 1})), NotInvertible);
}

TEST_CASE("comp_inverse is a two-sided inverse on random series")
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    std::size_t const order = 2 + static_cast<std::size_t>(i % 11);
    auto const f = random_series(rng, order, true, false);
    auto const g = comp_inverse(f);
    REQUIRE(compose(f, g) == Series::identity(order));
    REQUIRE(compose(g, f) == Series::identity(order));
    REQUIRE(comp_inverse(g) == f);
  }
}

TEST_CASE("ternary-tree functional equations hold exactly to order 40")
{
  std::size_t const n = 40;
  auto const b3 = family_series(CoefficientFamily::b3, n);
  auto const g = family_series(CoefficientFamily::g, n);
  auto const z = Series::identity(n);
  CHECK((b3 - (Series::one(n) + z * b3 * b3 * b3)).is_zero());
  CHECK((g - (b3 + b3 * b3)).is_zero());
  auto const cubic = Series::constant(2, n) - z - Series::polynomial({1, 2}, n) * g + Rational(2) * z * g * g -
                     z * z * g * g * g;
  CHECK(cubic.is_zero());
}

TEST_CASE("shifts")
{
  auto const f = from_ints({0, 2, 3});
  CHECK(f.shifted_down() == from_ints({2, 3}));
  CHECK(f.shifted_up() == from_ints({0, 0, 2, 3}));
  CHECK_THROWS_AS(from_ints({1, 2}).shifted_down(), InvalidParameter);
}

TEST_CASE("double coefficients")
{
  TruncatedSeries<double> a{1.0, -1.0, 0.0, 0.0};
  auto const inv = reciprocal(a);
  CHECK(inv[3] == doctest::Approx(1.0));
}
