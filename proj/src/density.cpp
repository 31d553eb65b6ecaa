#include "freemoments/density.hpp"

#include "freemoments/errors.hpp"
#include "freemoments/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace freemoments {

namespace {

using std::numbers::pi;

constexpr double mu0_edge = 27.0 / 4.0;

// V with the distance to the right edge passed in; x itself is the distance to 0.
double v_kernel(double x, double from_hi)
{
  double const r = std::sqrt(4.0 * from_hi / 27.0);
  double const cx = std::cbrt(x);
  double const c1 = std::sqrt(3.0) / (std::pow(2.0, 10.0 / 3.0) * pi * cx * cx);
  double const c2 = 1.0 / (std::pow(2.0, 8.0 / 3.0) * pi * cx * std::sqrt(3.0));
  double const w = std::cbrt(1.0 + r);
  return c1 * (3.0 * r - 1.0) * w + c2 * (3.0 * r + 1.0) / w;
}

double beta_norm(double a, double b) { return gamma(a + b) / (gamma(a) * gamma(b)); }

std::string fmt(double v)
{
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

} // namespace

namespace detail {

int grading_power(double exponent)
{
  for (int q = 1; q <= 12; ++q) {
    double const s = q * exponent;
    if (std::abs(s - std::round(s)) < 1e-9) { return q; }
  }
  return 2;
}

} // namespace detail

DensityFn DensityFn::v_mu0() { return {DensityKind::v_mu0, 0, 0, {0.0, mu0_edge}, {}, -2.0 / 3.0, 0.5}; }

DensityFn DensityFn::marchenko_pastur(double t)
{
  if (!(t > 0.0)) { throw InvalidParameter("marchenko-pastur rate must be positive"); }
  double const st = std::sqrt(t);
  DensityFn f{DensityKind::mp, t, 0, {(1.0 - st) * (1.0 - st), (1.0 + st) * (1.0 + st)}, {}, 0.5, 0.5};
  if (t < 1.0) { f.atoms.push_back({0.0, 1.0 - t}); }
  if (t == 1.0) { f.e_lo = -0.5; }
  return f;
}

DensityFn DensityFn::mu1()
{
  double const s8 = std::sqrt(8.0);
  return {DensityKind::mu1_ac, 0, 0, {3.0 - s8, 3.0 + s8}, {{0.0, 0.5}}, 0.5, 0.5};
}

DensityFn DensityFn::mu2() { return {DensityKind::mu2_ac, 0, 0, {0.0, 4.0}, {{0.0, 0.5}}, -0.5, 0.5}; }

DensityFn DensityFn::beta(double alpha, double beta)
{
  if (!(alpha > 0.0) || !(beta > 0.0)) { throw InvalidParameter("beta parameters must be positive"); }
  return {DensityKind::beta, alpha, beta, {0.0, 1.0}, {}, alpha - 1.0, beta - 1.0};
}

DensityFn DensityFn::arcsine() { return {DensityKind::arcsine, 0, 0, {0.0, 4.0}, {}, -0.5, -0.5}; }

double DensityFn::operator()(double x) const { return at(x, x - support.lo, support.hi - x); }

double DensityFn::at(double x, double from_lo, double from_hi) const
{
  if (from_lo < 0.0 || from_hi < 0.0) { return 0.0; }
  if (from_lo == 0.0 || from_hi == 0.0) {
    double const e = from_lo == 0.0 ? e_lo : e_hi;
    if (e > 0.0) { return 0.0; }
    if (e < 0.0) { throw OutOfSupport(name() + " density diverges at " + fmt(x)); }
  }
  switch (kind) {
  case DensityKind::v_mu0: return v_kernel(x, from_hi);
  case DensityKind::mp: return std::sqrt(from_lo * from_hi) / (2.0 * pi * x);
  case DensityKind::mu1_ac: return std::sqrt(from_lo * from_hi) / (4.0 * pi * x);
  case DensityKind::mu2_ac: return std::sqrt(from_lo * from_hi) / (4.0 * pi * x);
  case DensityKind::beta:
    return beta_norm(param_a, param_b) * std::pow(from_lo, param_a - 1.0) * std::pow(from_hi, param_b - 1.0);
  case DensityKind::arcsine: return 1.0 / (pi * std::sqrt(from_lo * from_hi));
  }
  return 0.0;
}

double DensityFn::atom_mass() const
{
  double m = 0.0;
  for (auto const &a : atoms) { m += a.mass; }
  return m;
}

std::string DensityFn::name() const
{
  switch (kind) {
  case DensityKind::v_mu0: return "mu0";
  case DensityKind::mp: return "mp:" + fmt(param_a);
  case DensityKind::mu1_ac: return "mu1";
  case DensityKind::mu2_ac: return "mu2";
  case DensityKind::beta: return "beta:" + fmt(param_a) + "," + fmt(param_b);
  case DensityKind::arcsine: return "arcsine";
  }
  return "?";
}

double v_density(double x)
{
  if (!(x >= 0.0 && x <= mu0_edge)) { throw OutOfSupport("V is defined on (0, 27/4), got " + fmt(x)); }
  if (x == 0.0) { throw OutOfSupport("V diverges at 0"); }
  if (x == mu0_edge) { return 0.0; }
  return v_kernel(x, mu0_edge - x);
}

double v_density_hypergeometric(double x)
{
  if (!(x > 0.0 && x < mu0_edge)) { throw OutOfSupport("V is defined on (0, 27/4), got " + fmt(x)); }
  double const u = 4.0 * x / 27.0;
  double const cx = std::cbrt(x);
  return std::sqrt(3.0) / (4.0 * pi * cx * cx) * hyp2f1(-2.0 / 3.0, 5.0 / 6.0, 2.0 / 3.0, u) +
         1.0 / (2.0 * pi * std::sqrt(3.0) * cx) * hyp2f1(-1.0 / 3.0, 7.0 / 6.0, 4.0 / 3.0, u);
}

double mp_density(double t, double x) { return DensityFn::marchenko_pastur(t)(x); }
double mu1_density(double x) { return DensityFn::mu1()(x); }
double mu2_density(double x) { return DensityFn::mu2()(x); }
double beta_density(double alpha, double beta, double x) { return DensityFn::beta(alpha, beta)(x); }
double arcsine_density(double x) { return DensityFn::arcsine()(x); }

double g_closed_form(double z)
{
  constexpr double z_max = 4.0 / 27.0;
  if (!(z > 0.0 && z <= z_max * (1.0 + 1e-15))) { throw OutOfDomain("closed form of G needs 0 < z <= 4/27"); }
  double const alpha = std::asin(std::min(1.0, std::sqrt(27.0 * z / 4.0))) / 3.0;
  double const c2 = std::cos(alpha) * std::cos(alpha);
  double const d = 4.0 * c2 - 1.0;
  return (12.0 * c2 + 6.0) / (d * d);
}

double g_series(double z, std::size_t terms)
{
  // a_{n+1} / a_n = (3n+3)(3n+2)(3n+1) / ((2n+2)(2n+1)(n+2)) for a_n = 2 C(3n,n) / (n+1).
  double term = 2.0;
  double sum = term;
  for (std::size_t n = 0; n < terms; ++n) {
    double const dn = static_cast<double>(n);
    term *= z * (3 * dn + 3) * (3 * dn + 2) * (3 * dn + 1) / ((2 * dn + 2) * (2 * dn + 1) * (dn + 2));
    sum += term;
  }
  return sum;
}

double g_hypergeometric(double z, double c)
{
  if (!(z > 0.0)) { throw OutOfDomain("hypergeometric form of G needs z > 0"); }
  return (2.0 - 2.0 * hyp2f1(-2.0 / 3.0, -1.0 / 3.0, c, 27.0 * z / 4.0)) / (3.0 * z);
}

double trig_2f1_closed_form(double u)
{
  if (!(u >= 0.0 && u < 1.0)) { throw OutOfDomain("trigonometric 2F1 form needs 0 <= u < 1"); }
  double const a = std::asin(std::sqrt(u)) / 3.0;
  return std::sqrt(u) * std::sin(a) / 3.0 + std::sqrt(1.0 - u) * std::cos(a);
}

double bulk_integral(DensityFn const &f, double a, double b)
{
  return bulk_integral(f, a, b, [](double) { return 1.0; });
}

double quad_moment(DensityFn const &f, unsigned n)
{
  double total = 0.0;
  for (auto const &atom : f.atoms) { total += atom.mass * std::pow(atom.location, n); }
  return total + bulk_integral(f, f.support.lo, f.support.hi, [n](double x) { return std::pow(x, n); });
}

double cdf(DensityFn const &f, double x)
{
  double total = 0.0;
  for (auto const &atom : f.atoms) {
    if (atom.location <= x) { total += atom.mass; }
  }
  if (x > f.support.lo) { total += bulk_integral(f, f.support.lo, x); }
  return total;
}

double mellin_density_numeric(double x)
{
  if (!(x > 0.0 && x < mu0_edge)) { throw OutOfSupport("mu0 density is evaluated on (0, 27/4)"); }
  // X = c Y Z with Y ~ Beta(1/3, 1/6), Z ~ Beta(2/3, 4/3): f(x) = ∫ f_Y(y) f_Z(x/(cy)) dy/(cy), y ∈ (x/c, 1).
  // y = 1 - v^6 absorbs (1-y)^{-5/6}; v = v0 (1 - w^3) absorbs (1-z)^{1/3} at y = x/c.
  double const c = mu0_edge;
  double const ratio = x / c;
  double const v0 = std::pow(1.0 - ratio, 1.0 / 6.0);
  double const v0_6 = 1.0 - ratio;
  double const norm_y = beta_norm(1.0 / 3.0, 1.0 / 6.0);
  double const norm_z = beta_norm(2.0 / 3.0, 4.0 / 3.0);
  auto integrand = [&](double w) {
    double const w3 = w * w * w;
    double const v = v0 * (1.0 - w3);
    double const y = 1.0 - std::pow(v, 6);
    double const y_minus = -v0_6 * std::expm1(6.0 * std::log1p(-w3)); // y - x/c
    double const z = ratio / y;
    double const fy_dy = norm_y * std::pow(y, -2.0 / 3.0) * 18.0 * v0 * w * w;
    double const fz = norm_z * std::pow(z, -1.0 / 3.0) * std::cbrt(y_minus / y);
    return fy_dy * fz / (c * y);
  };
  return integrate(integrand, 0.0, 1.0);
}

std::vector<double> density_grid(DensityFn const &f, std::size_t points)
{
  std::vector<double> xs(points);
  double const width = f.support.hi - f.support.lo;
  for (std::size_t i = 0; i < points; ++i) {
    xs[i] = f.support.lo + width * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
  }
  return xs;
}

} // namespace freemoments
