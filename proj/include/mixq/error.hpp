#pragma once

#include <stdexcept>
#include <string>

namespace mixq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad syntax, schema violation, unknown names.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition
/// (non-lattice order, non-clopen tuple, budget exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixq
