#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangentia {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: ring mismatch, violated precondition, malformed data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but outside what the toolkit computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A resource guard tripped (variable count, degree, size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A computation ran past the deadline installed with ScopedDeadline.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tangentia
