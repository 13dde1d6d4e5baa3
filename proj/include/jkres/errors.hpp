#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jkres {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes disagree (vector length, matrix size, variable count).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A polynomial has the wrong degree or is not homogeneous where required.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// A family of vectors has the wrong rank for the requested operation.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Generic precondition failure on user-supplied data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RegularityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PolarizationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The origin is not an isolated common zero of a polynomial system.
class NotIsolatedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical invariant that should always hold was violated. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jkres
