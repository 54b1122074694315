#pragma once

#include <stdexcept>
#include <string>

namespace kneading {

// Base of every error raised by the library. Each subclass names one failure
// mode so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of a value was violated (interior C, failed family
// validation, formula/enumeration disagreement, periodic orbit residual too large).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Two truncated itineraries where one is a strict prefix of the other.
class PrefixIncomparable : public Error {
 public:
  using Error::Error;
};

// A target lies above the critical value mu, so the inverse branch has no
// preimage.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class SolveFailure : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kneading
