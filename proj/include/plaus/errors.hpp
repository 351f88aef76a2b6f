#pragma once

#include <stdexcept>
#include <string>

namespace plaus {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input value: bad labels, partial tables, violated structure clauses.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras, or domains/codomains do not match.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// A documented operation precondition does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive sweep would exceed its size guard; carries the cost estimate.
class GuardError : public Error {
 public:
  GuardError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}

  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// Syntax error in formula text; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace plaus
