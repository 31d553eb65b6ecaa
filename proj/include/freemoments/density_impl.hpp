#pragma once

#include <algorithm>
#include <cmath>

#include "freemoments/quadrature.hpp"

namespace freemoments {

namespace detail {

/// Smallest q in 1..12 with q * e integral; x - lo = L u^q then turns a
/// (x - lo)^e series with that denominator into a smooth integrand.
int grading_power(double exponent);

} // namespace detail

template <typename W>
double bulk_integral(DensityFn const &f, double a, double b, W &&weight)
{
  double const lo = f.support.lo;
  double const hi = f.support.hi;
  a = std::max(a, lo);
  b = std::min(b, hi);
  if (!(a < b)) { return 0.0; }
  double const mid = 0.5 * (lo + hi);
  double total = 0.0;

  if (a < mid) {
    int const q = detail::grading_power(f.e_lo);
    double const len = mid - lo;
    double const u0 = std::pow((a - lo) / len, 1.0 / q);
    double const u1 = std::pow((std::min(b, mid) - lo) / len, 1.0 / q);
    total += integrate(
      [&](double u) {
        double const from_lo = len * std::pow(u, q);
        double const x = lo + from_lo;
        return weight(x) * f.at(x, from_lo, hi - x) * q * len * std::pow(u, q - 1);
      },
      u0, u1);
  }
  if (b > mid) {
    int const q = detail::grading_power(f.e_hi);
    double const len = hi - mid;
    double const v0 = std::pow((hi - b) / len, 1.0 / q);
    double const v1 = std::pow((hi - std::max(a, mid)) / len, 1.0 / q);
    total += integrate(
      [&](double v) {
        double const from_hi = len * std::pow(v, q);
        double const x = hi - from_hi;
        return weight(x) * f.at(x, x - lo, from_hi) * q * len * std::pow(v, q - 1);
      },
      v0, v1);
  }
  return total;
}

} // namespace freemoments
