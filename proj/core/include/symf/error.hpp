#pragma once

#include <stdexcept>
#include <string>

namespace symf {

/// A precondition on the caller's input was violated (size mismatch,
/// non-homogeneous input, unsupported basis pair, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (degree, representation dimension) was exceeded.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input: partition, permutation word or element literal.
class SyntaxError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal consistency check failed, e.g. a structure constant that
/// must be an integer came out fractional. Never caused by user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symf
