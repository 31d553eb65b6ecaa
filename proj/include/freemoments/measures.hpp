#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "freemoments/rational.hpp"

namespace freemoments {

/// Exact moments s_0..s_N of a compactly supported measure.
struct MomentSequence
{
  std::vector<Rational> values;

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
  Rational const &operator[](std::size_t n) const { return values[n]; }
  friend bool operator==(MomentSequence const &, MomentSequence const &) = default;
};

struct MeasureSpec;

namespace measure {

struct Dirac { Rational location; };
struct Beta { Rational alpha, beta; };
struct MarchenkoPastur { Rational rate; };
struct Dilation
{
  Rational factor;
  std::shared_ptr<MeasureSpec const> inner;
};
struct Mix
{
  std::vector<Rational> weights;
  std::vector<MeasureSpec> parts;
};
enum class Named { mu0, mu1, mu2, arcsine, bernoulli_half };

} // namespace measure

/// Symbolic description of one of the catalog measures.
struct MeasureSpec
{
  using Node = std::variant<measure::Dirac, measure::Beta, measure::MarchenkoPastur, measure::Dilation, measure::Mix, measure::Named>;
  Node node;
};

// Validating constructors; throw InvalidParameter on bad parameters.
MeasureSpec dirac(Rational c);
MeasureSpec beta(Rational alpha, Rational beta);
MeasureSpec marchenko_pastur(Rational t);
MeasureSpec dilate(Rational c, MeasureSpec inner);
MeasureSpec mix(std::vector<Rational> weights, std::vector<MeasureSpec> parts);
MeasureSpec named(measure::Named which);

/// Checks the invariants of a spec built by hand (recursively).
void validate(MeasureSpec const &spec);

/// mu1, mu2 and bernoulli_half expand to their structural definitions; everything else is returned unchanged.
MeasureSpec resolve(MeasureSpec const &spec);

/// Exact moments s_0..s_N. Throws InvalidParameter for invalid specs.
MomentSequence moments(MeasureSpec const &spec, std::size_t order);

enum class CoefficientFamily { b3, b3_squared, g, mu0_moment };

/// Closed-form coefficients of the ternary-tree generating functions:
/// b3: C(3n+1,n)/(3n+1), b3_squared: 2 C(3n+2,n)/(3n+2), g: 2 C(3n,n)/(n+1),
/// mu0_moment: C(3n,n)/(n+1).
Rational named_coefficient(CoefficientFamily family, long n);

/// Narayana-weighted sum sum_k C(n,k) C(n,k-1) t^k / n, the n-th moment of the Marchenko-Pastur law.
Rational marchenko_pastur_moment(Rational const &t, long n);

std::string to_string(measure::Named which);

} // namespace freemoments
