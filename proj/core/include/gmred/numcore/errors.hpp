#pragma once

#include <stdexcept>
#include <string>

namespace gmred {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point lies outside a chart's domain (or left it during integration).
struct DomainError : Error {
  using Error::Error;
};

/// A linear structure required to be invertible is (numerically) singular.
struct DegeneracyError : Error {
  using Error::Error;
};

/// API misuse: bad arguments, unsupported derivative depth, unknown names.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace gmred
