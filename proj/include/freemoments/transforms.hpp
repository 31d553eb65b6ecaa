#pragma once

#include <vector>

#include "freemoments/measures.hpp"
#include "freemoments/series.hpp"

namespace freemoments {

/// Free cumulants k_1..k_N; values[0] holds k_1.
struct FreeCumulants
{
  std::vector<Rational> values;

  std::size_t order() const { return values.size(); }
  /// k_n for 1 <= n <= order().
  Rational const &operator()(std::size_t n) const { return values[n - 1]; }
  friend bool operator==(FreeCumulants const &, FreeCumulants const &) = default;
};

/// M(z) = sum s_n z^n.
Series moment_series(MomentSequence const &s);
MomentSequence from_series(Series const &m);

/// Solves R(z M(z)) + 1 = M(z) for the R-transform coefficients. Throws NotNormalized when s_0 != 1.
FreeCumulants moments_to_cumulants(MomentSequence const &s);
/// Inverse of moments_to_cumulants; s_0 = 1.
MomentSequence cumulants_to_moments(FreeCumulants const &k);

/// R(z) = sum k_n z^n as a series of order N.
Series r_transform(FreeCumulants const &k);

/// Moments of a ⊞ b at the smaller of the two orders.
MomentSequence free_add_convolve(MomentSequence const &a, MomentSequence const &b);

/// S-transform coefficients S_0..S_order, from T = (M - 1)^{<-1>} and S = (1+z) T / z.
/// Needs moments through s_{order+1}. Throws ZeroMean when s_1 == 0, NotNormalized when s_0 != 1.
Series s_transform(MomentSequence const &s, std::size_t order);
/// Highest S-transform order available from s (order of s minus one).
Series s_transform(MomentSequence const &s);

/// Inverts s_transform: moments s_0..s_{N+1} from S_0..S_N. Throws ZeroMean when S_0 == 0.
MomentSequence moments_from_s_transform(Series const &s);

/// Moments of a ⊠ b, via S_{a⊠b} = S_a S_b.
MomentSequence free_mult_convolve(MomentSequence const &a, MomentSequence const &b);

/// Moments of the product of independent variables: s_n(a) s_n(b).
MomentSequence mellin_convolve(MomentSequence const &a, MomentSequence const &b);

} // namespace freemoments
