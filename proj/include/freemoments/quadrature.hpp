#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace freemoments {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule
{
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(std::size_t n);
  std::size_t size() const { return nodes.size(); }
};

/// Composite Gauss-Legendre over `panels` equal subintervals of [a, b].
/// Panels are summed left to right so the result is deterministic.
template <typename F>
double composite_gauss_legendre(F &&f, double a, double b, std::size_t panels, GaussLegendreRule const &rule)
{
  double const h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    double const lo = a + h * static_cast<double>(p);
    double const mid = lo + 0.5 * h;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) { panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]); }
    total += 0.5 * h * panel;
  }
  return total;
}

struct QuadratureOptions
{
  double rel_tol = 1e-14;
  double abs_tol = 1e-15;
  std::size_t initial_panels = 4;
  std::size_t max_panels = 4096;
};

/// Integrates a smooth f over [a, b], doubling the panel count until two
/// successive composite estimates agree within max(abs_tol, rel_tol * |I|).
/// Throws QuadratureFailure if max_panels is reached first.
double integrate(std::function<double(double)> const &f, double a, double b, QuadratureOptions const &opt = {});

/// The 20-point rule shared by the adaptive integrator.
GaussLegendreRule const &default_rule();

} // namespace freemoments
