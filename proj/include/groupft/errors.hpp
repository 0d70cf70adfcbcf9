#pragma once

#include <stdexcept>
#include <string>

namespace groupft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A group, measure, function or config document could not be parsed.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Operands were built on different group backends.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace groupft
