#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "freemoments/errors.hpp"
#include "freemoments/rational.hpp"

namespace freemoments {

/// Formal power series c_0 + c_1 z + ... + c_N z^N known modulo z^{N+1}.
///
/// The truncation order N is part of the value: binary operations produce a
/// result at the smaller of the two operand orders and never extend precision.
template <typename Scalar>
class TruncatedSeries
{
public:
  using value_type = Scalar;

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0)
    : c_(order + 1, Scalar(0))
  {
  }
  /// Coefficients c_0..c_N; the order is coefficients.size() - 1. Empty input gives the zero series of order 0.
  explicit TruncatedSeries(std::vector<Scalar> coefficients)
    : c_(std::move(coefficients))
  {
    if (c_.empty()) { c_.push_back(Scalar(0)); }
  }
  TruncatedSeries(std::initializer_list<Scalar> coefficients)
    : TruncatedSeries(std::vector<Scalar>(coefficients))
  {
  }

  static TruncatedSeries constant(Scalar const &v, std::size_t order)
  {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }
  /// Polynomial with the given low coefficients, zero-padded (or cut) to `order`.
  static TruncatedSeries polynomial(std::initializer_list<Scalar> low, std::size_t order)
  {
    TruncatedSeries s(order);
    std::size_t i = 0;
    for (auto const &c : low) {
      if (i > order) { break; }
      s.c_[i++] = c;
    }
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return constant(Scalar(1), order); }
  /// The series z.
  static TruncatedSeries identity(std::size_t order)
  {
    TruncatedSeries s(order);
    if (order >= 1) { s.c_[1] = Scalar(1); }
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  Scalar const &operator[](std::size_t i) const { return c_[i]; }
  Scalar &operator[](std::size_t i) { return c_[i]; }
  std::span<Scalar const> coefficients() const { return c_; }

  bool is_zero() const
  {
    return std::all_of(c_.begin(), c_.end(), [](Scalar const &x) { return x == Scalar(0); });
  }

  /// Drops coefficients above `order` (no-op when already at or below it).
  TruncatedSeries truncated(std::size_t order) const
  {
    if (order >= this->order()) { return *this; }
    return TruncatedSeries(std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  /// z * f, exact to one more order.
  TruncatedSeries shifted_up() const
  {
    std::vector<Scalar> r(c_.size() + 1, Scalar(0));
    std::copy(c_.begin(), c_.end(), r.begin() + 1);
    return TruncatedSeries(std::move(r));
  }
  /// f / z; requires c_0 == 0 and loses one order.
  TruncatedSeries shifted_down() const
  {
    if (!(c_[0] == Scalar(0))) { throw InvalidParameter("cannot divide by z: nonzero constant term"); }
    if (c_.size() == 1) { return TruncatedSeries(std::size_t{0}); }
    return TruncatedSeries(std::vector<Scalar>(c_.begin() + 1, c_.end()));
  }

  TruncatedSeries &operator*=(Scalar const &k)
  {
    for (auto &x : c_) { x *= k; }
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries const &a, TruncatedSeries const &b)
  {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) { r.c_[i] = a.c_[i] + b.c_[i]; }
    return r;
  }
  friend TruncatedSeries operator-(TruncatedSeries const &a, TruncatedSeries const &b)
  {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) { r.c_[i] = a.c_[i] - b.c_[i]; }
    return r;
  }
  friend TruncatedSeries operator-(TruncatedSeries a)
  {
    for (auto &x : a.c_) { x = -x; }
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, Scalar const &k) { return a *= k; }
  friend TruncatedSeries operator*(Scalar const &k, TruncatedSeries a) { return a *= k; }

  /// Cauchy product truncated at the smaller order.
  friend TruncatedSeries operator*(TruncatedSeries const &a, TruncatedSeries const &b)
  {
    std::size_t const n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.c_[i] == Scalar(0)) { continue; }
      for (std::size_t j = 0; i + j <= n; ++j) { r.c_[i + j] += a.c_[i] * b.c_[j]; }
    }
    return r;
  }

  friend bool operator==(TruncatedSeries const &, TruncatedSeries const &) = default;

private:
  std::vector<Scalar> c_;
};

using Series = TruncatedSeries<Rational>;

/// b with a*b == 1 up to a's order. Throws ZeroConstantTerm when a_0 == 0.
template <typename Scalar>
TruncatedSeries<Scalar> reciprocal(TruncatedSeries<Scalar> const &a)
{
  if (a[0] == Scalar(0)) { throw ZeroConstantTerm("reciprocal of a series with zero constant term"); }
  std::size_t const n = a.order();
  TruncatedSeries<Scalar> b(n);
  Scalar const inv0 = Scalar(1) / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= k; ++i) { acc += a[i] * b[k - i]; }
    b[k] = -acc * inv0;
  }
  return b;
}

/// outer(inner(z)) by Horner's scheme on series. Throws InnerConstantNonzero when inner_0 != 0.
template <typename Scalar>
TruncatedSeries<Scalar> compose(TruncatedSeries<Scalar> const &outer, TruncatedSeries<Scalar> const &inner)
{
  if (!(inner[0] == Scalar(0))) { throw InnerConstantNonzero("composition needs an inner series without constant term"); }
  std::size_t const n = std::min(outer.order(), inner.order());
  auto const g = inner.truncated(n);
  auto r = TruncatedSeries<Scalar>::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * g;
    r[0] += outer[k];
  }
  return r;
}

/// Compositional inverse g of f, i.e. f(g(z)) == z up to f's order.
///
/// Solved one coefficient per degree: with g known through degree k-1, the
/// coefficient of z^k in f(g) is f_1 g_k plus terms that are already fixed.
/// Throws NotInvertible unless f_0 == 0 and f_1 != 0.
template <typename Scalar>
TruncatedSeries<Scalar> comp_inverse(TruncatedSeries<Scalar> const &f)
{
  if (f.order() < 1 || !(f[0] == Scalar(0)) || f[1] == Scalar(0)) {
    throw NotInvertible("compositional inverse needs f(0) = 0 and f'(0) != 0");
  }
  std::size_t const n = f.order();
  Scalar const inv1 = Scalar(1) / f[1];
  TruncatedSeries<Scalar> g(n);
  g[1] = inv1;
  for (std::size_t k = 2; k <= n; ++k) {
    auto const probe = compose(f.truncated(k), g.truncated(k));
    g[k] = -probe[k] * inv1;
  }
  return g;
}

} // namespace freemoments
