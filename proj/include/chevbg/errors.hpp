#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chevbg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (coefficient spec or variable count).
class IncompatibleRing : public Error {
 public:
  using Error::Error;
};

/// Index outside the ambient range (variables, matrix rows, generator labels).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside what an operation supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow the grammar. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An internal construction could not certify its own postcondition. Always a defect.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace chevbg
