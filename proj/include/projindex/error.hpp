#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projindex {

/// Violated precondition or malformed input. The message names the invariant.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a local quotient fails to stabilize below the truncation cap,
/// i.e. the zero is (suspected) not isolated.
class NonIsolatedZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Text parse failure with a 1-based line/column position.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace projindex
