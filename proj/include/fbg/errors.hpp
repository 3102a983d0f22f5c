#pragma once

#include <stdexcept>
#include <string>

namespace fbg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance file. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// An instance-size or parameter guard was violated (instance too large,
/// impossible generator parameters, out-of-range configuration).
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace fbg
