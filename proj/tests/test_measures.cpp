#include <doctest.h>

#include "freemoments/errors.hpp"
#include "freemoments/measure_expr.hpp"
#include "freemoments/measures.hpp"

using namespace freemoments;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

} // namespace

TEST_CASE("mu0 moments are C(3n,n)/(n+1)")
{
  auto const s = moments(named(measure::Named::mu0), 8);
  CHECK(s.values == rats({1, Rational(3, 2), 5, 21, 99, Rational(1001, 2), 2652, 14535, 81719}));
}

TEST_CASE("beta moments")
{
  auto const s = moments(beta(Rational(1, 3), Rational(1, 6)), 2);
  CHECK(s.values == rats({1, Rational(2, 3), Rational(16, 27)}));
  // Beta(1,1) is uniform on [0,1]
  auto const u = moments(beta(1, 1), 4);
  CHECK(u.values == rats({1, Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)}));
}

TEST_CASE("Marchenko-Pastur moments are Narayana polynomials")
{
  CHECK(moments(marchenko_pastur(1), 5).values == rats({1, 1, 2, 5, 14, 42}));
  // t + t^2, t + 3t^2 + t^3 at t = 1/2
  auto const h = moments(marchenko_pastur(Rational(1, 2)), 3);
  CHECK(h.values == rats({1, Rational(1, 2), Rational(3, 4), Rational(11, 8)}));
  CHECK(marchenko_pastur_moment(2, 2) == Rational(6));
}

TEST_CASE("catalog measures")
{
  CHECK(moments(named(measure::Named::mu2), 4).values == rats({1, Rational(1, 2), 1, Rational(5, 2), 7}));
  CHECK(moments(named(measure::Named::bernoulli_half), 3).values ==
        rats({1, Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(moments(named(measure::Named::mu1), 3).values == rats({1, 1, 3, 11}));
  CHECK(moments(named(measure::Named::arcsine), 4).values == rats({1, 2, 6, 20, 70}));
  CHECK(moments(dirac(3), 3).values == rats({1, 3, 9, 27}));
  CHECK(moments(dirac(0), 2).values == rats({1, 0, 0}));
}

TEST_CASE("dilation scales the n-th moment by c^n")
{
  auto const base = moments(named(measure::Named::mu0), 10);
  auto const d = moments(dilate(Rational(2, 3), named(measure::Named::mu0)), 10);
  for (std::size_t n = 0; n <= 10; ++n) { CHECK(d[n] == base[n] * pow(Rational(2, 3), static_cast<long>(n))); }
}

TEST_CASE("invalid parameters are rejected")
{
  CHECK_THROWS_AS(beta(0, 1), InvalidParameter);
  CHECK_THROWS_AS(beta(1, -1), InvalidParameter);
  CHECK_THROWS_AS(marchenko_pastur(0), InvalidParameter);
  CHECK_THROWS_AS(dirac(-1), InvalidParameter);
  CHECK_THROWS_AS(dilate(0, dirac(1)), InvalidParameter);
  CHECK_THROWS_AS(mix({Rational(1, 2)}, {dirac(0)}), InvalidParameter);
  CHECK_THROWS_AS(mix({Rational(1, 2), Rational(1, 3)}, {dirac(0), dirac(1)}), InvalidParameter);
  CHECK_THROWS_AS(mix({Rational(3, 2), Rational(-1, 2)}, {dirac(0), dirac(1)}), InvalidParameter);
  MeasureSpec bad{measure::Beta{Rational(-1), Rational(1)}};
  CHECK_THROWS_AS(moments(bad, 3), InvalidParameter);
}

TEST_CASE("measure expressions")
{
  auto const same = [](std::string_view text, MeasureSpec const &m) {
    return moments(parse_measure(text), 12) == moments(m, 12);
  };
  CHECK(same("mu0", named(measure::Named::mu0)));
  CHECK(same("mu1", dilate(2, marchenko_pastur(Rational(1, 2)))));
  CHECK(same("mp:1/2", marchenko_pastur(Rational(1, 2))));
  CHECK(same("beta:1/3,1/6", beta(Rational(1, 3), Rational(1, 6))));
  CHECK(same("dilate:27/4(beta:2/3,4/3)", dilate(Rational(27, 4), beta(Rational(2, 3), Rational(4, 3)))));
  CHECK(same("mix:1/2*dirac:0+1/2*mp:1", named(measure::Named::mu2)));
  CHECK(same("mix:1/4*dilate:1(mix:1/2*dirac:0+1/2*dirac:1)+3/4*arcsine",
             mix({Rational(1, 4), Rational(3, 4)},
                 {named(measure::Named::bernoulli_half), named(measure::Named::arcsine)})));

  CHECK_THROWS_AS(parse_measure("mu3"), ParseError);
  CHECK_THROWS_AS(parse_measure("mp:"), ParseError);
  CHECK_THROWS_AS(parse_measure("dilate:2(mu0"), ParseError);
  CHECK_THROWS_AS(parse_measure("mu0 extra"), ParseError);
  CHECK_THROWS_AS(parse_measure("mp:0"), InvalidParameter);
  CHECK_THROWS_AS(parse_measure("mix:1/2*mu0+1/3*mu1"), InvalidParameter);
  try {
    parse_measure("beta:1,x");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.position == 7);
  }
}

TEST_CASE("printed measure expressions parse back to the same moments")
{
  std::vector<MeasureSpec> const specs{
    named(measure::Named::mu0),
    named(measure::Named::bernoulli_half),
    beta(Rational(2, 3), Rational(4, 3)),
    dilate(Rational(5, 2), marchenko_pastur(Rational(3, 7))),
    mix({Rational(1, 3), Rational(2, 3)}, {dirac(Rational(1, 2)), named(measure::Named::mu1)}),
    mix({Rational(1, 2), Rational(1, 2)},
        {mix({Rational(1, 2), Rational(1, 2)}, {dirac(0), dirac(2)}), named(measure::Named::arcsine)}),
  };
  for (auto const &m : specs) {
    auto const text = to_string(m);
    CAPTURE(text);
    CHECK(moments(parse_measure(text), 10) == moments(m, 10));
    CHECK(to_string(parse_measure(text)) == text);
  }
}
