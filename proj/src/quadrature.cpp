#include "freemoments/quadrature.hpp"

#include "freemoments/errors.hpp"

#include <numbers>

namespace freemoments {

GaussLegendreRule::GaussLegendreRule(std::size_t n)
  : nodes(n)
  , weights(n)
{
  // Newton iteration on P_n from the Chebyshev-like initial guess.
  std::size_t const half = (n + 1) / 2;
  double const dn = static_cast<double>(n);
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        double const p3 = p2;
        p2 = p1;
        double const dj = static_cast<double>(j);
        p1 = ((2.0 * dj - 1.0) * z * p2 - (dj - 1.0) * p3) / dj;
      }
      dp = dn * (z * p1 - p2) / (z * z - 1.0);
      double const step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) { break; }
    }
    double const w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

GaussLegendreRule const &default_rule()
{
  static GaussLegendreRule const rule(20);
  return rule;
}

double integrate(std::function<double(double)> const &f, double a, double b, QuadratureOptions const &opt)
{
  if (a == b) { return 0.0; }
  auto const &rule = default_rule();
  std::size_t panels = opt.initial_panels;
  double prev = composite_gauss_legendre(f, a, b, panels, rule);
  while (panels < opt.max_panels) {
    panels *= 2;
    double const cur = composite_gauss_legendre(f, a, b, panels, rule);
    if (std::abs(cur - prev) <= std::max(opt.abs_tol, opt.rel_tol * std::abs(cur))) { return cur; }
    prev = cur;
  }
  throw QuadratureFailure("composite Gauss-Legendre did not converge on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
}

} // namespace freemoments
