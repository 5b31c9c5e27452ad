#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on user-supplied data failed (bad letter, bad family
// parameters, inapplicable move, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Malformed textual input; carries a 1-based line/column position.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, int line, int column)
      : ValidationError(what + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A configured resource limit was exceeded (Temperley-Lieb strand cap,
// crossing cap, scan bounds).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A proven internal invariant failed; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace braidforge
