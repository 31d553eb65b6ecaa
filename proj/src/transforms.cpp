#include "freemoments/transforms.hpp"

#include "freemoments/errors.hpp"

namespace freemoments {

namespace {

// Coefficients [z^m] M(z)^k, filled in the order the moment/cumulant recursion
// needs them: at step n only entries with k + m == n are added, and these
// depend on s_0..s_{n-1} alone.
class PowerTable
{
public:
  explicit PowerTable(std::vector<Rational> const &s)
    : s_(s)
  {
  }

  // Adds Q_k[n-k] for k = 1..n (requires s_0..s_{n-1}); returns nothing, query with at().
  void extend_to(std::size_t n)
  {
    if (q_.size() < n + 1) { q_.resize(n + 1); }
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t const m = n - k;
      auto &row = q_[k];
      if (row.size() != m) { continue; }
      if (k == 1) {
        row.push_back(s_[m]);
        continue;
      }
      auto const &prev = q_[k - 1];
      Rational acc = 0;
      for (std::size_t j = 0; j <= m; ++j) { acc += s_[j] * prev[m - j]; }
      row.push_back(std::move(acc));
    }
  }

  Rational const &at(std::size_t k, std::size_t m) const { return q_[k][m]; }

private:
  std::vector<Rational> const &s_;
  std::vector<std::vector<Rational>> q_;
};

void require_normalized(MomentSequence const &s)
{
  if (s.values.empty() || s[0] != Rational(1)) { throw NotNormalized("moment sequence must start with s_0 = 1"); }
}

} // namespace

Series moment_series(MomentSequence const &s) { return Series(s.values); }

MomentSequence from_series(Series const &m)
{
  auto const c = m.coefficients();
  return MomentSequence{{c.begin(), c.end()}};
}

FreeCumulants moments_to_cumulants(MomentSequence const &s)
{
  require_normalized(s);
  std::size_t const n_max = s.order();
  PowerTable table(s.values);
  std::vector<Rational> k(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.extend_to(n);
    Rational acc = s[n];
    for (std::size_t j = 1; j < n; ++j) { acc -= k[j - 1] * table.at(j, n - j); }
    k[n - 1] = std::move(acc);
  }
  return FreeCumulants{std::move(k)};
}

MomentSequence cumulants_to_moments(FreeCumulants const &k)
{
  std::size_t const n_max = k.order();
  std::vector<Rational> s(n_max + 1);
  s[0] = 1;
  PowerTable table(s);
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.extend_to(n);
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) { acc += k(j) * table.at(j, n - j); }
    s[n] = std::move(acc);
  }
  return MomentSequence{std::move(s)};
}

Series r_transform(FreeCumulants const &k)
{
  Series r(k.order());
  for (std::size_t n = 1; n <= k.order(); ++n) { r[n] = k(n); }
  return r;
}

MomentSequence free_add_convolve(MomentSequence const &a, MomentSequence const &b)
{
  require_normalized(a);
  require_normalized(b);
  auto const ka = moments_to_cumulants(a);
  auto const kb = moments_to_cumulants(b);
  std::size_t const n = std::min(ka.order(), kb.order());
  FreeCumulants sum{std::vector<Rational>(n)};
  for (std::size_t i = 1; i <= n; ++i) { sum.values[i - 1] = ka(i) + kb(i); }
  return cumulants_to_moments(sum);
}

Series s_transform(MomentSequence const &s, std::size_t order)
{
  require_normalized(s);
  if (s.order() < order + 1) {
    throw InvalidParameter("S-transform of order " + std::to_string(order) + " needs moments through s_" +
                           std::to_string(order + 1));
  }
  if (s[1].is_zero()) { throw ZeroMean("S-transform is undefined for zero-mean measures"); }
  auto m_minus_one = moment_series(s).truncated(order + 1);
  m_minus_one[0] = 0;
  auto const t = comp_inverse(m_minus_one);
  return Series::polynomial({1, 1}, order) * t.shifted_down();
}

Series s_transform(MomentSequence const &s)
{
  if (s.order() < 1) { throw InvalidParameter("S-transform needs at least s_0 and s_1"); }
  return s_transform(s, s.order() - 1);
}

MomentSequence moments_from_s_transform(Series const &s)
{
  if (s[0].is_zero()) { throw ZeroMean("S-transform with zero constant term"); }
  auto const one_plus_z = Series::polynomial({1, 1}, s.order());
  auto const t = (s * reciprocal(one_plus_z)).shifted_up();
  auto m = comp_inverse(t);
  m[0] = 1;
  return from_series(m);
}

MomentSequence free_mult_convolve(MomentSequence const &a, MomentSequence const &b)
{
  std::size_t const n = std::min(a.order(), b.order());
  if (n < 1) { throw InvalidParameter("free multiplicative convolution needs moments through s_1"); }
  return moments_from_s_transform(s_transform(a, n - 1) * s_transform(b, n - 1));
}

MomentSequence mellin_convolve(MomentSequence const &a, MomentSequence const &b)
{
  std::size_t const n = std::min(a.order(), b.order());
  std::vector<Rational> s(n + 1);
  for (std::size_t i = 0; i <= n; ++i) { s[i] = a[i] * b[i]; }
  return MomentSequence{std::move(s)};
}

} // namespace freemoments
