#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freemoments {

/// Base class for every error raised by the library.
struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };

// series
struct ZeroConstantTerm : Error { using Error::Error; };
struct InnerConstantNonzero : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// transforms
struct NotNormalized : Error { using Error::Error; };
struct ZeroMean : Error { using Error::Error; };

// density / special functions
struct OutOfSupport : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct NonPositiveArgument : Error { using Error::Error; };
struct NonConvergent : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };

// rmt
struct UnsupportedSpec : Error { using Error::Error; };

/// Measure-expression or rational-literal syntax error; `position` is a 0-based offset.
struct ParseError : Error
{
  ParseError(std::string const &msg, std::size_t pos)
    : Error(msg + " at position " + std::to_string(pos))
    , position(pos)
  {
  }
  std::size_t position;
};

} // namespace freemoments
