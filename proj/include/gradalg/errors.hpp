#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Objects that must share a parent (group, algebra, field) do not.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The operation has no decision procedure for this input shape.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A theorem's hypothesis fails for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Polynomial factorisation exceeded its configured instance cap.
class FactorizationCapError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t witness_column, const std::string& what)
      : Error(what), witness_column_(witness_column) {}

  // A column that is a linear combination of earlier columns.
  std::size_t witness_column() const { return witness_column_; }

 private:
  std::size_t witness_column_;
};

}  // namespace gradalg
