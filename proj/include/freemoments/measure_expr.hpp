#pragma once

#include <string>
#include <string_view>

#include "freemoments/measures.hpp"

namespace freemoments {

/// Parses the measure mini-language:
///
///   expr := mu0 | mu1 | mu2 | arcsine | bernoulli
///         | dirac:<q> | beta:<q>,<q> | mp:<q>
///         | dilate:<q>(<expr>)
///         | mix:<q>*<expr>{+<q>*<expr>}
///
/// where <q> is an integer or p/q literal. A nested mix inside a mix term
/// takes every following term; wrap it in dilate:1(...) to stop it.
/// Throws ParseError (with the offending offset) or InvalidParameter.
MeasureSpec parse_measure(std::string_view text);

/// Canonical text form. Parsing it back yields a measure with the same moments;
/// a nested mix followed by further terms comes back wrapped in dilate:1(...).
std::string to_string(MeasureSpec const &spec);

} // namespace freemoments
