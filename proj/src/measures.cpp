#include "freemoments/measures.hpp"

#include "freemoments/errors.hpp"

namespace freemoments {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

void require_positive(Rational const &v, char const *what)
{
  if (v.sign() <= 0) { throw InvalidParameter(std::string(what) + " must be positive, got " + v.str()); }
}

} // namespace

MeasureSpec dirac(Rational c)
{
  MeasureSpec s{measure::Dirac{std::move(c)}};
  validate(s);
  return s;
}

MeasureSpec beta(Rational alpha, Rational beta)
{
  MeasureSpec s{measure::Beta{std::move(alpha), std::move(beta)}};
  validate(s);
  return s;
}

MeasureSpec marchenko_pastur(Rational t)
{
  MeasureSpec s{measure::MarchenkoPastur{std::move(t)}};
  validate(s);
  return s;
}

MeasureSpec dilate(Rational c, MeasureSpec inner)
{
  MeasureSpec s{measure::Dilation{std::move(c), std::make_shared<MeasureSpec const>(std::move(inner))}};
  validate(s);
  return s;
}

MeasureSpec mix(std::vector<Rational> weights, std::vector<MeasureSpec> parts)
{
  MeasureSpec s{measure::Mix{std::move(weights), std::move(parts)}};
  validate(s);
  return s;
}

MeasureSpec named(measure::Named which) { return MeasureSpec{which}; }

void validate(MeasureSpec const &spec)
{
  std::visit(
    overloaded{
      [](measure::Dirac const &d) {
        if (d.location.sign() < 0) { throw InvalidParameter("dirac location must be nonnegative, got " + d.location.str()); }
      },
      [](measure::Beta const &b) {
        require_positive(b.alpha, "beta alpha");
        require_positive(b.beta, "beta beta");
      },
      [](measure::MarchenkoPastur const &m) { require_positive(m.rate, "marchenko-pastur rate"); },
      [](measure::Dilation const &d) {
        require_positive(d.factor, "dilation factor");
        if (!d.inner) { throw InvalidParameter("dilation without inner measure"); }
        validate(*d.inner);
      },
      [](measure::Mix const &m) {
        if (m.weights.empty() || m.weights.size() != m.parts.size()) {
          throw InvalidParameter("mixture needs one weight per part");
        }
        Rational total = 0;
        for (auto const &w : m.weights) {
          if (w.sign() < 0) { throw InvalidParameter("mixture weight must be nonnegative, got " + w.str()); }
          total += w;
        }
        if (total != Rational(1)) { throw InvalidParameter("mixture weights sum to " + total.str() + ", expected 1"); }
        for (auto const &p : m.parts) { validate(p); }
      },
      [](measure::Named) {},
    },
    spec.node);
}

MeasureSpec resolve(MeasureSpec const &spec)
{
  auto const *n = std::get_if<measure::Named>(&spec.node);
  if (!n) { return spec; }
  Rational const half(1, 2);
  switch (*n) {
  case measure::Named::mu1: return dilate(2, marchenko_pastur(half));
  case measure::Named::mu2: return mix({half, half}, {dirac(0), marchenko_pastur(1)});
  case measure::Named::bernoulli_half: return mix({half, half}, {dirac(0), dirac(1)});
  case measure::Named::mu0:
  case measure::Named::arcsine: return spec;
  }
  return spec;
}

Rational named_coefficient(CoefficientFamily family, long n)
{
  if (n < 0) { throw InvalidParameter("coefficient index must be nonnegative"); }
  switch (family) {
  case CoefficientFamily::b3: return Rational(binomial(3 * n + 1, n), 3 * n + 1);
  case CoefficientFamily::b3_squared: return Rational(binomial(3 * n + 2, n) * 2, 3 * n + 2);
  case CoefficientFamily::g: return Rational(binomial(3 * n, n) * 2, n + 1);
  case CoefficientFamily::mu0_moment: return Rational(binomial(3 * n, n), n + 1);
  }
  return 0;
}

Rational marchenko_pastur_moment(Rational const &t, long n)
{
  if (n == 0) { return 1; }
  Rational sum = 0;
  Rational tk = 1;
  for (long k = 1; k <= n; ++k) {
    tk *= t;
    sum += Rational(BigInt(binomial(n, k) * binomial(n, k - 1))) * tk;
  }
  return sum / Rational(n);
}

MomentSequence moments(MeasureSpec const &spec, std::size_t order)
{
  validate(spec);
  std::vector<Rational> s(order + 1);
  std::visit(
    overloaded{
      [&](measure::Dirac const &d) {
        s[0] = 1;
        for (std::size_t n = 1; n <= order; ++n) { s[n] = s[n - 1] * d.location; }
      },
      [&](measure::Beta const &b) {
        s[0] = 1;
        for (std::size_t n = 1; n <= order; ++n) {
          Rational const i(static_cast<long>(n - 1));
          s[n] = s[n - 1] * (b.alpha + i) / (b.alpha + b.beta + i);
        }
      },
      [&](measure::MarchenkoPastur const &m) {
        for (std::size_t n = 0; n <= order; ++n) { s[n] = marchenko_pastur_moment(m.rate, static_cast<long>(n)); }
      },
      [&](measure::Dilation const &d) {
        auto const inner = moments(*d.inner, order);
        Rational cn = 1;
        for (std::size_t n = 0; n <= order; ++n) {
          s[n] = inner[n] * cn;
          cn *= d.factor;
        }
      },
      [&](measure::Mix const &m) {
        for (auto &v : s) { v = 0; }
        for (std::size_t p = 0; p < m.parts.size(); ++p) {
          auto const part = moments(m.parts[p], order);
          for (std::size_t n = 0; n <= order; ++n) { s[n] += m.weights[p] * part[n]; }
        }
      },
      [&](measure::Named which) {
        switch (which) {
        case measure::Named::mu0:
          for (std::size_t n = 0; n <= order; ++n) {
            s[n] = named_coefficient(CoefficientFamily::mu0_moment, static_cast<long>(n));
          }
          break;
        case measure::Named::arcsine:
          for (std::size_t n = 0; n <= order; ++n) {
            s[n] = Rational(binomial(2 * static_cast<long>(n), static_cast<long>(n)));
          }
          break;
        default: s = moments(resolve(spec), order).values; break;
        }
      },
    },
    spec.node);
  return MomentSequence{std::move(s)};
}

std::string to_string(measure::Named which)
{
  switch (which) {
  case measure::Named::mu0: return "mu0";
  case measure::Named::mu1: return "mu1";
  case measure::Named::mu2: return "mu2";
  case measure::Named::arcsine: return "arcsine";
  case measure::Named::bernoulli_half: return "bernoulli";
  }
  return "?";
}

} // namespace freemoments
