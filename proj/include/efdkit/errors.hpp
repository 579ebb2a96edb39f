#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efdkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A node or value not admitted by the signature/algebra it is used with.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on an argument (k = 0, empty gcd input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported syntactic fragment of a decision procedure.
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// Permutation enumeration cap exceeded in the piecewise canonicalizer.
class CapExceeded : public FragmentError {
 public:
  using FragmentError::FragmentError;
};

/// Element outside its algebra's universe.
class UniverseError : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

/// Checked int64 arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace efdkit
