#pragma once

#include <stdexcept>
#include <string>

namespace bott {

/// Malformed or out-of-range input (bad dimension, parse failure, size mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The matrix is not conjugate to a strictly upper triangular binary matrix.
class NotBottMatrix : public InputError {
 public:
  using InputError::InputError;
};

/// An operation's documented precondition does not hold for its argument.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested enumeration exceeds its configured size bound.
class BoundExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bott
