#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace succinct {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A first-order variable used where a set variable is expected, or vice versa.
class SortError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

/// Substitution target is bound inside the formula.
class CaptureError : public Error {
 public:
  using Error::Error;
};

/// A configured state or memo budget was exhausted. Never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class WordError : public Error {
 public:
  using Error::Error;
};

class ContextError : public Error {
 public:
  using Error::Error;
};

}  // namespace succinct
