#pragma once

#include <stdexcept>
#include <string>

namespace mipoly {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs outside the domain of an operation: parameter bounds, inadmissible
/// virtual-state labels, malformed descriptors.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee of the construction failed (degree anomaly,
/// prefactor mismatch, unexpected node). Signals a bug or a degenerate input.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

/// A rational differential operator produced a non-polynomial result.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// A checked identity did not hold.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mipoly
