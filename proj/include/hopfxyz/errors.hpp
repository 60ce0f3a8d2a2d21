#pragma once

#include <stdexcept>

namespace hopf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands come from different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Malformed or unverified input: bad indices, parameters, or hypotheses
/// (e.g. an action that is not a module-algebra action).
struct InvalidInput : Error {
  using Error::Error;
};

/// Raised by materialize() when the algebra is larger than the caller's cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace hopf
