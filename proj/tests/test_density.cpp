#include <doctest.h>

#include <cmath>
#include <numbers>

#include "freemoments/density.hpp"
#include "freemoments/errors.hpp"
#include "freemoments/measures.hpp"
#include "freemoments/quadrature.hpp"
#include "freemoments/special.hpp"

using namespace freemoments;

namespace {

bool close(double got, double want, double rel)
{
  return std::abs(got - want) <= rel * std::abs(want);
}

double exact_moment(MeasureSpec const &m, std::size_t n) { return moments(m, n)[n].to_double(); }

} // namespace

TEST_CASE("gamma")
{
  CHECK(close(freemoments::gamma(1.0 / 3.0), 2.678938534707747633655693, 1e-14));
  CHECK(close(freemoments::gamma(5.0), 24.0, 1e-15));
  CHECK(close(freemoments::gamma(0.5), std::sqrt(std::numbers::pi), 1e-15));
  CHECK_THROWS_AS(freemoments::gamma(0.0), NonPositiveArgument);
  CHECK_THROWS_AS(freemoments::gamma(-1.5), NonPositiveArgument);
}

TEST_CASE("hypergeometric series")
{
  CHECK(close(hyp2f1(-2.0 / 3.0, 5.0 / 6.0, 2.0 / 3.0, 0.4), 0.6360320371214063987025281, 1e-15));
  // 2F1(1, 1; 2 | x) = -log(1 - x) / x
  CHECK(close(hyp2f1(1, 1, 2, 0.5), -std::log(0.5) / 0.5, 1e-15));
  // terminating series: 2F1(-2, b; c | x) is a quadratic
  CHECK(close(hyp2f1(-2, 3, 4, 0.9), 1 - 2.0 * 3 / 4 * 0.9 + 3.0 * 4 / (4 * 5) * 0.81, 1e-15));
  auto const s = hyp2f1_sum(0.5, 0.5, 1.5, 0.25);
  CHECK(close(s.value, std::asin(0.5) / 0.5, 1e-15));
  CHECK(s.tail_bound <= 1e-15);
  CHECK(s.terms > 5);
  CHECK_THROWS_AS(hyp2f1(1, 1, 2, 1.0), NonConvergent);
  CHECK_THROWS_AS(hyp2f1(1, 1, -2, 0.5), NonConvergent);
}

TEST_CASE("trigonometric closed form equals 2F1(-2/3, -1/3; -1/2 | u)")
{
  for (double u : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    CAPTURE(u);
    CHECK(close(trig_2f1_closed_form(u), hyp2f1(-2.0 / 3.0, -1.0 / 3.0, -0.5, u), 1e-13));
  }
}

TEST_CASE("V oracle values")
{
  struct Point { double x, v; };
  Point const points[] = {
    {0.5, 0.3183098861837906715377675},   {1.0, 0.2080379958217082502730226},
    {3.0, 0.0930728006052943135475052},   {5.0, 0.04861585887468321445101612},
    {6.5, 0.01602976832401337089521586},  {3.375, 0.08297247286681231958495744},
  };
  for (auto const &p : points) {
    CAPTURE(p.x);
    CHECK(close(v_density(p.x), p.v, 1e-13));
    CHECK(close(v_density_hypergeometric(p.x), p.v, 1e-12));
  }
  CHECK(v_density(6.75) == 0.0);
  CHECK_THROWS_AS(v_density(0.0), OutOfSupport);
  CHECK_THROWS_AS(v_density(-1.0), OutOfSupport);
  CHECK_THROWS_AS(v_density(7.0), OutOfSupport);
}

TEST_CASE("V agrees with numerical Mellin convolution of the beta densities")
{
  for (double x : {0.05, 0.5, 1.0, 2.0, 3.375, 5.0, 6.5, 6.7}) {
    CAPTURE(x);
    CHECK(close(mellin_density_numeric(x), v_density(x), 1e-10));
  }
  CHECK_THROWS_AS(mellin_density_numeric(0.0), OutOfSupport);
  CHECK_THROWS_AS(mellin_density_numeric(6.75), OutOfSupport);
}

TEST_CASE("closed-form bulk densities")
{
  CHECK(close(mu1_density(3.0), 0.07502635967975883913, 1e-14));
  CHECK(close(mu2_density(2.0), 0.079577471545947667884, 1e-14));
  CHECK(close(mp_density(1.0, 2.0), 0.15915494309189533577, 1e-14));
  CHECK(mp_density(0.5, 5.0) == 0.0);
  CHECK(close(arcsine_density(2.0), 1.0 / (2.0 * std::numbers::pi), 1e-14));
  CHECK(close(beta_density(2, 3, 0.5), 12 * 0.5 * 0.25, 1e-14));
}

TEST_CASE("G: closed form, series and the hypergeometric parameter")
{
  CHECK(close(g_series(0.1, 400), 2.483954129185990414230001, 1e-14));
  CHECK(close(g_closed_form(0.1), 2.483954129185990414230001, 1e-13));
  CHECK(close(g_closed_form(4.0 / 27.0), 15.0 / 4.0, 1e-13));
  CHECK_THROWS_AS(g_closed_form(0.0), OutOfDomain);
  CHECK_THROWS_AS(g_closed_form(0.2), OutOfDomain);
  for (double z : {0.01, 0.05, 0.1, 0.14}) {
    CAPTURE(z);
    double const ref = g_series(z, 400);
    CHECK(close(g_closed_form(z), ref, 1e-12));
    // the lower parameter has to be -1/2: +1/2 gives a different function
    CHECK(close(g_hypergeometric(z, -0.5), ref, 1e-12));
    CHECK_FALSE(close(g_hypergeometric(z, 0.5), ref, 1e-3));
  }
}

TEST_CASE("quadrature")
{
  GaussLegendreRule const rule(20);
  double sum = 0;
  for (double w : rule.weights) { sum += w; }
  CHECK(close(sum, 2.0, 1e-15));
  CHECK(close(integrate([](double x) { return std::exp(x); }, 0, 1), std::numbers::e - 1, 1e-14));
  CHECK(close(integrate([](double x) { return std::cos(x); }, 0, std::numbers::pi / 2), 1.0, 1e-14));
  QuadratureOptions tight;
  tight.max_panels = 4;
  tight.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, tight), QuadratureFailure);
}

TEST_CASE("V is a probability density with the mu0 moments")
{
  auto const v = DensityFn::v_mu0();
  CHECK(close(quad_moment(v, 0), 1.0, 1e-12));
  for (unsigned n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(close(quad_moment(v, n), exact_moment(named(measure::Named::mu0), n), 1e-10));
  }
  CHECK(close(cdf(v, 6.75), 1.0, 1e-12));
  CHECK(cdf(v, -1.0) == 0.0);
  CHECK(cdf(v, 1.0) > 0.3);
}

TEST_CASE("catalog densities reproduce their exact moments")
{
  struct Case { DensityFn f; MeasureSpec m; };
  Case const cases[] = {
    {DensityFn::mu1(), named(measure::Named::mu1)},
    {DensityFn::mu2(), named(measure::Named::mu2)},
    {DensityFn::marchenko_pastur(0.5), marchenko_pastur(Rational(1, 2))},
    {DensityFn::marchenko_pastur(1.0), marchenko_pastur(1)},
    {DensityFn::marchenko_pastur(2.0), marchenko_pastur(2)},
    {DensityFn::arcsine(), named(measure::Named::arcsine)},
    {DensityFn::beta(1.0 / 3.0, 1.0 / 6.0), beta(Rational(1, 3), Rational(1, 6))},
  };
  for (auto const &c : cases) {
    CAPTURE(c.f.name());
    for (unsigned n = 0; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(close(quad_moment(c.f, n), exact_moment(c.m, n), 1e-10));
    }
  }
}

TEST_CASE("endpoint behavior")
{
  auto const v = DensityFn::v_mu0();
  CHECK_THROWS_AS(v(0.0), OutOfSupport);
  CHECK(v(6.75) == 0.0);
  CHECK(v(-0.5) == 0.0);
  CHECK(v(8.0) == 0.0);
  auto const m = DensityFn::marchenko_pastur(0.5);
  CHECK(m.atom_mass() == doctest::Approx(0.5));
  CHECK(DensityFn::marchenko_pastur(2.0).atom_mass() == 0.0);
  CHECK(DensityFn::mu1().atom_mass() == doctest::Approx(0.5));
  CHECK(DensityFn::mu2().atom_mass() == doctest::Approx(0.5));
}

TEST_CASE("density grid")
{
  auto const g = density_grid(DensityFn::v_mu0(), 4);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == doctest::Approx(6.75 / 8));
  CHECK(g[3] == doctest::Approx(6.75 * 7 / 8));
  for (double x : density_grid(DensityFn::v_mu0(), 257)) { CHECK(v_density(x) >= 0.0); }
}
