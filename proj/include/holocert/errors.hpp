#pragma once

#include <stdexcept>
#include <string>

namespace holocert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Evaluation asked for a variable that has no binding.
class MissingBinding : public Error {
 public:
  explicit MissingBinding(const std::string& var)
      : Error("no binding for variable '" + var + "'"), variable(var) {}
  std::string variable;
};

/// A resultant was requested on arguments that do not meet its preconditions.
class ResultantError : public Error {
 public:
  using Error::Error;
};

/// A parameter point violates a genericity condition the operation relies on.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Invariant violation inside the exact pipeline (indicates a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Floating point integration failure.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace holocert
