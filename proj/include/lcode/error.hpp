#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input (exit code 2 in the CLI).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lcode
