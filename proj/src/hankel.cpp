#include "freemoments/hankel.hpp"

#include "freemoments/errors.hpp"

#include <utility>

namespace freemoments {

RationalMatrix hankel_matrix(std::span<Rational const> s, std::size_t k)
{
  if (s.size() < 2 * k + 1) { throw InvalidParameter("hankel matrix needs moments through s_" + std::to_string(2 * k)); }
  RationalMatrix h(k + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= k; ++j) { h[i][j] = s[i + j]; }
  }
  return h;
}

Rational determinant(RationalMatrix m)
{
  std::size_t const n = m.size();
  if (n == 0) { return 1; }
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) { ++p; }
      if (p == n) { return 0; }
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) { m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev; }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Rational> leading_principal_minors(RationalMatrix const &m)
{
  std::vector<Rational> minors;
  minors.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) {
    RationalMatrix block(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) { block[i][j] = m[i][j]; }
    }
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

} // namespace freemoments
