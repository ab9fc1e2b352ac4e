#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecheck {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match (matrix/vector dimensions, ambient spaces).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Input that fails structural validation (bad index, malformed rational, ...).
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace liecheck
