#pragma once

#include <stdexcept>
#include <string>

namespace p1z {

// Base of every error raised by the library. Each subclass corresponds to a
// distinct failure class so callers (and the CLI exit-code mapping) can
// dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Root finder called on an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// An operation needs a nonempty set (n*Theta cap Z, a span) that is empty.
class EmptyError : public Error {
 public:
  EmptyError(const std::string& what, int suggested_n = 0)
      : Error(what), suggested_n_(suggested_n) {}

  // Smallest level at which the set becomes nonempty, 0 when unknown.
  int suggested_n() const noexcept { return suggested_n_; }

 private:
  int suggested_n_;
};

// Exhaustive enumeration requested above the configured size limits.
class CapError : public Error {
 public:
  using Error::Error;
};

// Zariski decomposition requested for a non pseudo-effective divisor (a+b<1).
class NoDecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace p1z
