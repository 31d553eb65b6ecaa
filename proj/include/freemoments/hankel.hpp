#pragma once

#include <span>
#include <vector>

#include "freemoments/rational.hpp"

namespace freemoments {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// (s_{i+j}) for 0 <= i, j <= k; needs s_0..s_{2k}.
RationalMatrix hankel_matrix(std::span<Rational const> s, std::size_t k);

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
Rational determinant(RationalMatrix m);

/// det of the leading (j+1)x(j+1) blocks for j = 0..size-1.
std::vector<Rational> leading_principal_minors(RationalMatrix const &m);

} // namespace freemoments
