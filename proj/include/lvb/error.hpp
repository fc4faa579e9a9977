#pragma once

#include <stdexcept>
#include <string>

namespace lvb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (missing entry, non-dominant weight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A move context is not applicable to the diagram it was applied to.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No row of the move table matched a non-distinguished diagram.
class DispatchIncompleteError : public Error {
 public:
  using Error::Error;
};

/// A move claimed well-behavedness that the statistics do not confirm.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Enumeration window exceeds the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Two distinct distinguished diagrams share a tau or kappa value.
class BijectivityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace lvb
