#pragma once

#include <stdexcept>
#include <string>

namespace commsplit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a hard enumeration/brute-force bound.
struct CapacityError : Error {
  using Error::Error;
};

// Operands disagree on ambient dimensions (n, m, rank).
struct DimensionError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

// The requested (family, operation) combination is deliberately not provided.
struct UnsupportedError : Error {
  using Error::Error;
};

// An identity that must hold exactly failed; never downgraded to a warning.
struct ConsistencyError : Error {
  using Error::Error;
};

// Base for failures of floating-point procedures.
struct NumericalError : Error {
  using Error::Error;
};

struct ClassificationError : NumericalError {
  using NumericalError::NumericalError;
};

struct DegeneracyError : NumericalError {
  using NumericalError::NumericalError;
};

struct SingularityError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace commsplit
