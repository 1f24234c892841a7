#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different dimensions.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(int expected, int actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

/// A precondition on an argument value failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but outside what the implementation supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A body expected to have constant width does not.
class NotConstantWidth : public Error {
 public:
  explicit NotConstantWidth(double spread)
      : Error("body is not of constant width (spread " +
              std::to_string(spread) + ")"),
        spread_(spread) {}
  double spread() const { return spread_; }

 private:
  double spread_;
};

/// An iterative solver exhausted its budget before reaching tolerance.
class MaxIterations : public Error {
 public:
  MaxIterations(int iterations, double gap)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (gap " + std::to_string(gap) + ")"),
        gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Malformed serialized input; `pointer` is a JSON pointer to the bad field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace widthlab
