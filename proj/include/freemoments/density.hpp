#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace freemoments {

struct Atom
{
  double location;
  double mass;
};

struct Interval
{
  double lo;
  double hi;
};

enum class DensityKind { v_mu0, mp, mu1_ac, mu2_ac, beta, arcsine };

/// A catalog probability measure on the line: an absolutely continuous part
/// on `support` plus point masses.
///
/// The endpoint exponents describe f(x) ~ (x - lo)^{e_lo} and (hi - x)^{e_hi};
/// integration grades its nodes toward each endpoint so that these power laws
/// become smooth in the substituted variable.
struct DensityFn
{
  DensityKind kind;
  double param_a = 0.0; ///< t for mp; alpha for beta
  double param_b = 0.0; ///< beta for beta
  Interval support;
  std::vector<Atom> atoms;
  double e_lo = 0.0;
  double e_hi = 0.0;

  static DensityFn v_mu0();
  static DensityFn marchenko_pastur(double t);
  static DensityFn mu1();
  static DensityFn mu2();
  static DensityFn beta(double alpha, double beta);
  static DensityFn arcsine();

  /// Density of the continuous part: 0 outside the open support, the limit at
  /// an endpoint when finite. Throws OutOfSupport at an endpoint where it diverges.
  double operator()(double x) const;
  /// Same, with the distances x - lo and hi - x supplied by the caller so that
  /// the endpoint factors keep full relative precision.
  double at(double x, double from_lo, double from_hi) const;

  double atom_mass() const;
  std::string name() const;
};

/// V(x) on (0, 27/4): the explicit radical form of the mu0 density.
/// Throws OutOfSupport outside [0, 27/4] and at x = 0; V(27/4) = 0.
double v_density(double x);
/// The same density written through two 2F1 series in 4x/27.
double v_density_hypergeometric(double x);

/// Bulk density of the Marchenko-Pastur law; 0 outside [(1-√t)², (1+√t)²].
double mp_density(double t, double x);
double mu1_density(double x);
double mu2_density(double x);
double beta_density(double alpha, double beta, double x);
double arcsine_density(double x);

/// G(z) = (12 cos²α + 6) / (4 cos²α - 1)² with α = arcsin(√(27z/4)) / 3, 0 < z <= 4/27.
/// Throws OutOfDomain elsewhere.
double g_closed_form(double z);
/// Partial sum of 2 C(3n,n) z^n / (n+1) for n = 0..terms.
double g_series(double z, std::size_t terms);
/// (2 - 2 ₂F₁(-2/3, -1/3; c | 27z/4)) / (3z): the hypergeometric route to G for a
/// candidate lower parameter c.
double g_hypergeometric(double z, double c);
/// (1/3) √u sin(arcsin(√u)/3) + √(1-u) cos(arcsin(√u)/3), 0 <= u < 1.
double trig_2f1_closed_form(double u);

/// ∫ w(x) f(x) dx over [a, b] ∩ support, continuous part only.
template <typename W>
double bulk_integral(DensityFn const &f, double a, double b, W &&weight);
double bulk_integral(DensityFn const &f, double a, double b);

/// ∫ x^n dμ: atoms plus the continuous part. Throws QuadratureFailure.
double quad_moment(DensityFn const &f, unsigned n);

/// μ((-∞, x]). Throws QuadratureFailure.
double cdf(DensityFn const &f, double x);

/// Density at x of Beta(1/3,1/6) ∘ Beta(2/3,4/3) ∘ δ_{27/4}, by numerical Mellin
/// convolution of the two beta densities. Throws OutOfSupport outside (0, 27/4).
double mellin_density_numeric(double x);

/// P interior grid points (cell midpoints) across the support.
std::vector<double> density_grid(DensityFn const &f, std::size_t points);

} // namespace freemoments

#include "freemoments/density_impl.hpp"
