#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordrep {

/// Input rejected by a precondition check (bad parameter, unknown label, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that could not be parsed. Line and column are 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A constructed object failed its own post-verification. Always a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wordrep
