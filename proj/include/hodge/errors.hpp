#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// A step or degree budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A precondition of a theorem-backed computation does not hold.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hodge
