#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgen {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word-length or memory guard tripped.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands live on different words or dimensions.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgen
