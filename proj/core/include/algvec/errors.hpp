#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algvec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A float field element or a real/complex label was NaN or infinite.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class IncompatibleIndexKind : public Error {
 public:
  using Error::Error;
};

class IncompatibleInput : public Error {
 public:
  using Error::Error;
};

class OutOfRangeIndex : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ExactFieldPrune : public Error {
 public:
  ExactFieldPrune()
      : Error("prune_below is only defined for floating-point fields") {}
};

class InvalidScenario : public Error {
 public:
  using Error::Error;
};

/// Malformed text. Line and column are 1-based; line 0 means "not from a file".
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = line == 0 ? std::string{}
                                  : "line " + std::to_string(line) + ", ";
    return where + "column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace algvec
