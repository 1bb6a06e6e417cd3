#pragma once

#include <stdexcept>
#include <string>

namespace iesieve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An instance exceeds a hard size cap of the requested operation.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Fixed-width arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a sieve produced a negative
/// count). Always indicates a bug, never bad input.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace iesieve
