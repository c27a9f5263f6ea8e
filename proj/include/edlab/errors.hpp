#pragma once

#include <stdexcept>
#include <string>

namespace edlab {

// Base class for everything thrown out of the library. CLI maps these to
// nonzero exit codes; the python module maps them to ValueError/RuntimeError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed an argument outside an operation's domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. line() is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that the library deliberately does not handle
// (disconnected graphs, out-of-range family parameters).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Self-loops, duplicate or directed edges, vertex ids out of range.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Instance too large for the configured memory/size caps.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A truncated path-length table was used where exact answers are required.
class UnusableTable : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace edlab
