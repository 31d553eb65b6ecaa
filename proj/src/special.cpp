#include "freemoments/special.hpp"

#include "freemoments/errors.hpp"

#include <cmath>
#include <string>

namespace freemoments {

double gamma(double x)
{
  if (!(x > 0.0)) { throw NonPositiveArgument("gamma needs x > 0, got " + std::to_string(x)); }
  return std::tgamma(x);
}

HypergeometricSum hyp2f1_sum(double a, double b, double c, double x, double tol)
{
  if (!(std::abs(x) < 1.0)) { throw NonConvergent("2F1 series needs |x| < 1"); }
  constexpr std::size_t max_terms = 50'000'000;
  double sum = 1.0;
  double term = 1.0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    double const dn = static_cast<double>(n);
    if (c + dn == 0.0) { throw NonConvergent("2F1 lower parameter reaches a nonpositive integer"); }
    double const ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    term *= ratio;
    if (term == 0.0) { return {sum, 0.0, n + 1}; }
    sum += term;
    double const r = std::max(std::abs(ratio), std::abs(x));
    if (r < 1.0) {
      double const tail = std::abs(term) * r / (1.0 - r);
      if (tail <= tol * std::abs(sum)) { return {sum, tail, n + 2}; }
    }
  }
  throw NonConvergent("2F1 series did not reach tolerance");
}

} // namespace freemoments
