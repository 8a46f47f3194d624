#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxplus {

// Base class of everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InversionOfZero : public Error {
 public:
  InversionOfZero() : Error("inversion of the semiring zero") {}
};

class ZeroToNonpositivePower : public Error {
 public:
  ZeroToNonpositivePower() : Error("semiring zero raised to a nonpositive power") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class IrregularInput : public Error {
 public:
  using Error::Error;
};

class NoUnitDiagonalColumn : public Error {
 public:
  using Error::Error;
};

// Raised when a solver needs a strongly connected constraint graph.
// Carries the strongly connected components for diagnostics.
class ReducibleMatrix : public Error {
 public:
  ReducibleMatrix(std::string msg, std::vector<std::vector<std::size_t>> components)
      : Error(std::move(msg)), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

class InfeasibleCycles : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxplus
