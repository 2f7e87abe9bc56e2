#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyctrl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial/number text. `position()` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

/// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input document has the wrong shape (JSON schema, ragged matrix, ...).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyctrl
