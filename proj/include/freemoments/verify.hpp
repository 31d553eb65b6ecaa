#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freemoments/measures.hpp"

namespace freemoments {

enum class CheckStatus { pass, fail, error };

/// Outcome of one identity check.
///
/// `deviation` is the worst deviation seen: an exact rational for exact checks
/// (which pass only on "0"), a 17-digit float for numeric ones. Checks whose id
/// ends in "_positive" report the smallest value instead and pass iff it is > 0.
struct CheckResult
{
  std::string id;
  CheckStatus status = CheckStatus::error;
  std::string deviation;
  std::string tolerance; ///< "exact" or the float bound used
};

struct VerificationReport
{
  std::string suite;
  std::size_t order = 0;
  double tol = 0.0;
  std::vector<CheckResult> checks; ///< sorted by id
  CheckStatus overall = CheckStatus::error;
  double seconds = 0.0; ///< wall time; not part of the JSON form

  bool passed() const { return overall == CheckStatus::pass; }
  /// Deterministic JSON: suite, order, tol, checks[{id, status, deviation}], overall.
  std::string to_json() const;
};

enum class Suite { gf, mellin, freeconv, density, psd, all };

/// Throws InvalidParameter for unknown names.
Suite parse_suite(std::string_view name);
std::string to_string(Suite s);
std::string to_string(CheckStatus s);

/// Runs the identity checks of `suite` at truncation order `order` (>= 4) and
/// tolerance `tol` for the numeric checks.
VerificationReport run_suite(Suite suite, std::size_t order = 40, double tol = 1e-8);

/// As above, but checks that involve the mu0 moment sequence compare against
/// `mu0_reference` (which must reach `order`) instead of the closed form.
VerificationReport run_suite(Suite suite, std::size_t order, double tol, MomentSequence const &mu0_reference);

/// Little Schroeder numbers 1, 1, 3, 11, 45, ... through index n.
std::vector<Rational> little_schroeder(std::size_t n);

} // namespace freemoments
