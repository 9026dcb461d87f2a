#pragma once

#include <stdexcept>
#include <string>

namespace affsemi {

/// A mathematical precondition of an operation was violated (composite p,
/// m = 0, dimension mismatch, vector outside the semigroup, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed input file or stream.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user-supplied object disagrees with what the library computes.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace affsemi
