#pragma once

#include <stdexcept>
#include <string>

namespace prime_gauge {

// Root of every error the library throws. The CLI maps the concrete
// subclasses onto exit codes, so new error kinds must derive from one of
// the leaves below rather than from Error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (n < 5 for the
// Rosser-derived bound, k < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Work would require sieving past the configured budget or memory cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A product or power does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Caller broke a structural precondition, e.g. a basis too small for the
// interval it is asked to sieve.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Unknown rule, table id or format name.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace prime_gauge
