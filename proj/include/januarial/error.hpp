#pragma once

#include <stdexcept>
#include <string>

namespace januarial {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle strings, cache lines, report files).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Inputs that are well formed but violate an operation's precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A structural identity failed. Always an implementation bug or a
/// counterexample; never recoverable.
class IdentityViolation : public Error {
public:
  using Error::Error;
};

/// A bounded search finished without a witness.
class SearchExhausted : public Error {
public:
  using Error::Error;
};

} // namespace januarial
