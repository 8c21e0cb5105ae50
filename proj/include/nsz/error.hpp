#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsz {

/// Bad input from the caller: mismatched domains, wrong lengths, malformed arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition (e.g. a
/// specialization point that kills a leading coefficient).
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Mathematically undefined request: inverse of zero, leading term of zero.
class UndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Something the theory guarantees did not happen. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nsz
