#include "freemoments/verify.hpp"

#include "freemoments/density.hpp"
#include "freemoments/errors.hpp"
#include "freemoments/hankel.hpp"
#include "freemoments/series.hpp"
#include "freemoments/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace freemoments {

namespace {

std::string fmt(double v)
{
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

CheckResult exact_check(Rational const &worst)
{
  return {{}, worst.is_zero() ? CheckStatus::pass : CheckStatus::fail, worst.str(), "exact"};
}

CheckResult numeric_check(double worst, double tol)
{
  bool const ok = std::isfinite(worst) && worst <= tol;
  return {{}, ok ? CheckStatus::pass : CheckStatus::fail, fmt(worst), fmt(tol)};
}

CheckResult positive_check(std::vector<Rational> const &values)
{
  if (values.empty()) { return {{}, CheckStatus::error, "no values", "exact"}; }
  Rational const smallest = *std::min_element(values.begin(), values.end());
  return {{}, smallest.sign() > 0 ? CheckStatus::pass : CheckStatus::fail, smallest.str(), "exact"};
}

Rational worst_difference(std::span<Rational const> a, std::span<Rational const> b)
{
  if (a.size() != b.size()) { throw InvalidParameter("sequences of different lengths compared"); }
  Rational worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) { worst = std::max(worst, abs(a[i] - b[i])); }
  return worst;
}

Rational worst_abs(Series const &s)
{
  Rational worst = 0;
  for (auto const &c : s.coefficients()) { worst = std::max(worst, abs(c)); }
  return worst;
}

Series coefficient_series(CoefficientFamily family, std::size_t order)
{
  Series s(order);
  for (std::size_t n = 0; n <= order; ++n) { s[n] = named_coefficient(family, static_cast<long>(n)); }
  return s;
}

MomentSequence head(MomentSequence const &s, std::size_t order)
{
  if (s.order() < order) { throw InvalidParameter("reference sequence shorter than the requested order"); }
  return MomentSequence{{s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(order) + 1}};
}

struct Check
{
  std::string id;
  std::function<CheckResult()> run;
};

struct Context
{
  std::size_t order;
  double tol;
  MomentSequence mu0;
};

void add_gf(std::vector<Check> &out, Context const &ctx)
{
  std::size_t const n = ctx.order;
  out.push_back({"gf.tree_count_sum", [n] {
    Rational worst = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      auto const k = static_cast<long>(i);
      worst = std::max(worst, abs(named_coefficient(CoefficientFamily::g, k) -
                                  named_coefficient(CoefficientFamily::b3, k) -
                                  named_coefficient(CoefficientFamily::b3_squared, k)));
    }
    return exact_check(worst);
  }});
  out.push_back({"gf.b3_functional", [n] {
    auto const b3 = coefficient_series(CoefficientFamily::b3, n);
    auto const z = Series::identity(n);
    return exact_check(worst_abs(b3 - (Series::one(n) + z * b3 * b3 * b3)));
  }});
  out.push_back({"gf.b3_square", [n] {
    auto const b3 = coefficient_series(CoefficientFamily::b3, n);
    auto const b3sq = coefficient_series(CoefficientFamily::b3_squared, n);
    return exact_check(worst_abs(b3 * b3 - b3sq));
  }});
  out.push_back({"gf.g_decomposition", [n] {
    auto const b3 = coefficient_series(CoefficientFamily::b3, n);
    auto const g = coefficient_series(CoefficientFamily::g, n);
    return exact_check(worst_abs(g - (b3 + b3 * b3)));
  }});
  out.push_back({"gf.g_cubic", [n] {
    auto const g = coefficient_series(CoefficientFamily::g, n);
    auto const z = Series::identity(n);
    auto const residual = Series::constant(2, n) - z - Series::polynomial({1, 2}, n) * g +
                          Rational(2) * z * g * g - z * z * g * g * g;
    return exact_check(worst_abs(residual));
  }});
  out.push_back({"gf.trig_form", [tol = ctx.tol] {
    double worst = 0.0;
    for (double z : {0.01, 0.05, 0.10, 0.14}) { worst = std::max(worst, std::abs(g_closed_form(z) - g_series(z, 400))); }
    return numeric_check(worst, tol);
  }});
}

void add_mellin(std::vector<Check> &out, Context const &ctx)
{
  out.push_back({"mellin.beta_factorization", [&ctx] {
    std::size_t const n = ctx.order;
    auto const product = mellin_convolve(mellin_convolve(moments(beta(Rational(1, 3), Rational(1, 6)), n),
                                                         moments(beta(Rational(2, 3), Rational(4, 3)), n)),
                                         moments(dirac(Rational(27, 4)), n));
    return exact_check(worst_difference(product.values, ctx.mu0.values));
  }});
}

void add_freeconv(std::vector<Check> &out, Context const &ctx)
{
  std::size_t const n = ctx.order;
  out.push_back({"freeconv.mp_semigroup", [n] {
    Rational worst = 0;
    std::pair<Rational, Rational> const pairs[] = {
      {Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(2)}, {Rational(1, 3), Rational(5, 3)}};
    for (auto const &[s, t] : pairs) {
      auto const lhs = free_add_convolve(moments(marchenko_pastur(s), n), moments(marchenko_pastur(t), n));
      worst = std::max(worst, worst_difference(lhs.values, moments(marchenko_pastur(s + t), n).values));
    }
    return exact_check(worst);
  }});
  out.push_back({"freeconv.mu1_boxplus_mu2", [&ctx] {
    auto const sum = free_add_convolve(moments(named(measure::Named::mu1), ctx.order),
                                       moments(named(measure::Named::mu2), ctx.order));
    return exact_check(worst_difference(sum.values, ctx.mu0.values));
  }});
  out.push_back({"freeconv.mu0_cumulants", [&ctx] {
    auto const k = moments_to_cumulants(ctx.mu0);
    Rational worst = 0;
    for (std::size_t i = 1; i <= k.order(); ++i) {
      auto const li = static_cast<long>(i);
      Rational const closed = pow(Rational(2), li - 1) + Rational(binomial(2 * li, li)) * pow(Rational(2), -li - 1);
      worst = std::max(worst, abs(k(i) - closed));
    }
    return exact_check(worst);
  }});
  out.push_back({"freeconv.mu0_cumulants_positive", [&ctx] { return positive_check(moments_to_cumulants(ctx.mu0).values); }});
  out.push_back({"freeconv.bernoulli_boxtimes_mu1", [n] {
    auto const product = free_mult_convolve(moments(named(measure::Named::bernoulli_half), n),
                                            moments(named(measure::Named::mu1), n));
    return exact_check(worst_difference(product.values, moments(named(measure::Named::mu2), n).values));
  }});
  out.push_back({"freeconv.s_transform_product", [n] {
    auto const sb = s_transform(moments(named(measure::Named::bernoulli_half), n));
    auto const s1 = s_transform(moments(named(measure::Named::mu1), n));
    auto const s2 = s_transform(moments(named(measure::Named::mu2), n));
    return exact_check(worst_abs(sb * s1 - s2));
  }});
  out.push_back({"freeconv.schroeder_moments", [n] {
    auto const expected = little_schroeder(n);
    return exact_check(worst_difference(moments(named(measure::Named::mu1), n).values, expected));
  }});
}

double worst_relative_moment_error(DensityFn const &f, MomentSequence const &exact, std::size_t n_max)
{
  double worst = 0.0;
  for (std::size_t i = 0; i <= n_max; ++i) {
    double const want = exact[i].to_double();
    double const got = quad_moment(f, static_cast<unsigned>(i));
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  return worst;
}

void add_density(std::vector<Check> &out, Context const &ctx)
{
  std::size_t const n = std::min<std::size_t>(ctx.order, 20);
  double const tol = ctx.tol;
  out.push_back({"density.v_moments", [n, tol] {
    return numeric_check(worst_relative_moment_error(DensityFn::v_mu0(), moments(named(measure::Named::mu0), n), n), tol);
  }});
  out.push_back({"density.v_mass", [tol] { return numeric_check(std::abs(quad_moment(DensityFn::v_mu0(), 0) - 1.0), tol); }});
  out.push_back({"density.v_nonnegative", [] {
    double smallest = 0.0;
    constexpr int points = 10000;
    for (int i = 1; i <= points; ++i) { smallest = std::min(smallest, v_density(6.75 * i / (points + 1.0))); }
    return numeric_check(-smallest, 0.0);
  }});
  out.push_back({"density.mu1_moments", [n, tol] {
    return numeric_check(worst_relative_moment_error(DensityFn::mu1(), moments(named(measure::Named::mu1), n), n), tol);
  }});
  out.push_back({"density.mu2_moments", [n, tol] {
    return numeric_check(worst_relative_moment_error(DensityFn::mu2(), moments(named(measure::Named::mu2), n), n), tol);
  }});
  out.push_back({"density.mp_moments", [n, tol] {
    double worst = 0.0;
    for (auto const &t : {Rational(1, 2), Rational(1), Rational(2)}) {
      worst = std::max(worst, worst_relative_moment_error(DensityFn::marchenko_pastur(t.to_double()),
                                                          moments(marchenko_pastur(t), n), n));
    }
    return numeric_check(worst, tol);
  }});
  out.push_back({"density.v_vs_mellin", [tol] {
    double worst = 0.0;
    constexpr int points = 20;
    for (int i = 1; i <= points; ++i) {
      double const x = 6.75 * i / (points + 1.0);
      double const v = v_density(x);
      worst = std::max(worst, std::abs(mellin_density_numeric(x) - v) / std::max(1.0, std::abs(v)));
    }
    return numeric_check(worst, tol);
  }});
  out.push_back({"density.v_radical_vs_2f1", [tol] {
    double worst = 0.0;
    constexpr int points = 100;
    for (int i = 1; i <= points; ++i) {
      double const x = 6.75 * i / (points + 1.0);
      double const v = v_density(x);
      worst = std::max(worst, std::abs(v_density_hypergeometric(x) - v) / std::max(1.0, std::abs(v)));
    }
    return numeric_check(worst, tol);
  }});
}

std::vector<Rational> hankel_minors(std::vector<Rational> const &s, std::size_t k)
{
  return leading_principal_minors(hankel_matrix(s, k));
}

void add_psd(std::vector<Check> &out, Context const &ctx)
{
  std::size_t const k = std::min<std::size_t>(8, ctx.order / 2);
  out.push_back({"psd.hankel_mu0_positive", [&ctx, k] { return positive_check(hankel_minors(ctx.mu0.values, k)); }});
  out.push_back({"psd.hankel_mu1_positive", [k] {
    return positive_check(hankel_minors(moments(named(measure::Named::mu1), 2 * k).values, k));
  }});
  out.push_back({"psd.hankel_mu2_positive", [k] {
    return positive_check(hankel_minors(moments(named(measure::Named::mu2), 2 * k).values, k));
  }});
  out.push_back({"psd.hankel_r2_shifted_positive", [k] {
    // Coefficients of (R_2(z) - z/2) / z^2 with R_2 the second summand of R_mu0.
    std::vector<Rational> c(2 * k + 1);
    for (std::size_t i = 0; i <= 2 * k; ++i) {
      auto const m = static_cast<long>(i) + 2;
      c[i] = Rational(binomial(2 * m, m)) * pow(Rational(2), -static_cast<long>(i) - 3);
    }
    return positive_check(hankel_minors(c, k));
  }});
}

} // namespace

std::vector<Rational> little_schroeder(std::size_t n)
{
  static Rational const listed[] = {1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859};
  std::vector<Rational> s;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < std::size(listed)) {
      s.push_back(listed[i]);
      continue;
    }
    // (i+1) s_i = 3(2i-1) s_{i-1} - (i-2) s_{i-2}
    auto const li = static_cast<long>(i);
    s.push_back((Rational(3 * (2 * li - 1)) * s[i - 1] - Rational(li - 2) * s[i - 2]) / Rational(li + 1));
  }
  return s;
}

Suite parse_suite(std::string_view name)
{
  if (name == "gf") { return Suite::gf; }
  if (name == "mellin") { return Suite::mellin; }
  if (name == "freeconv") { return Suite::freeconv; }
  if (name == "density") { return Suite::density; }
  if (name == "psd") { return Suite::psd; }
  if (name == "all") { return Suite::all; }
  throw InvalidParameter("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite s)
{
  switch (s) {
  case Suite::gf: return "gf";
  case Suite::mellin: return "mellin";
  case Suite::freeconv: return "freeconv";
  case Suite::density: return "density";
  case Suite::psd: return "psd";
  case Suite::all: return "all";
  }
  return "?";
}

std::string to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::error: return "error";
  }
  return "?";
}

std::string VerificationReport::to_json() const
{
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["order"] = order;
  j["tol"] = tol;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto const &c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["deviation"] = c.deviation;
    j["checks"].push_back(std::move(e));
  }
  j["overall"] = to_string(overall);
  return j.dump(2);
}

VerificationReport run_suite(Suite suite, std::size_t order, double tol)
{
  return run_suite(suite, order, tol, moments(named(measure::Named::mu0), order));
}

VerificationReport run_suite(Suite suite, std::size_t order, double tol, MomentSequence const &mu0_reference)
{
  if (order < 4) { throw InvalidParameter("verification order must be at least 4"); }
  auto const start = std::chrono::steady_clock::now();
  Context const ctx{order, tol, head(mu0_reference, order)};

  std::vector<Check> checks;
  bool const all = suite == Suite::all;
  if (all || suite == Suite::gf) { add_gf(checks, ctx); }
  if (all || suite == Suite::mellin) { add_mellin(checks, ctx); }
  if (all || suite == Suite::freeconv) { add_freeconv(checks, ctx); }
  if (all || suite == Suite::density) { add_density(checks, ctx); }
  if (all || suite == Suite::psd) { add_psd(checks, ctx); }

  VerificationReport report{to_string(suite), order, tol, {}, CheckStatus::pass, 0.0};
  for (auto const &check : checks) {
    CheckResult r;
    try {
      r = check.run();
    } catch (std::exception const &e) {
      r = {{}, CheckStatus::error, e.what(), {}};
    }
    r.id = check.id;
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(), [](auto const &a, auto const &b) { return a.id < b.id; });
  for (auto const &c : report.checks) {
    if (c.status == CheckStatus::error) {
      report.overall = CheckStatus::error;
    } else if (c.status == CheckStatus::fail && report.overall == CheckStatus::pass) {
      report.overall = CheckStatus::fail;
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace freemoments
