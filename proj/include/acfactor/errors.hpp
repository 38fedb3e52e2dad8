#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acf {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An intermediate value left the exactly representable range, or an input
/// exceeds the configured trial-division bound.
class InputTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  ZeroInput() : Error("zero has no prime factorization") {}
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

/// Errors about the shape of user input. `position` is a byte offset into
/// the source text, or npos when the error is not tied to one spot.
class InputError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  InputError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public InputError {
 public:
  using InputError::InputError;
};

class DegreeError : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A result failed its own expansion check. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace acf
