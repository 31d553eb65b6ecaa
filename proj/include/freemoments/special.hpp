#pragma once

#include <cstddef>

namespace freemoments {

/// Γ(x) for x > 0. Throws NonPositiveArgument otherwise.
double gamma(double x);

struct HypergeometricSum
{
  double value;
  double tail_bound; ///< estimated bound on the omitted tail
  std::size_t terms;
};

/// Gauss series 2F1(a, b; c | x) summed directly for |x| < 1.
///
/// Summation stops once the geometric tail estimate |t_n| r / (1 - r), with r the
/// current term ratio bounded by |x|, falls below tol * |partial sum|.
/// Throws NonConvergent for |x| >= 1 or when c hits a nonpositive integer before
/// the series terminates.
HypergeometricSum hyp2f1_sum(double a, double b, double c, double x, double tol = 1e-16);
inline double hyp2f1(double a, double b, double c, double x, double tol = 1e-16)
{
  return hyp2f1_sum(a, b, c, x, tol).value;
}

} // namespace freemoments
