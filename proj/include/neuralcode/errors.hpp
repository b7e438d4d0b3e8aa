#pragma once

#include <stdexcept>
#include <string>

namespace neuralcode {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The code is empty or is all of 2^[n], or a word lies outside [n].
class InvalidCode : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was asked for at a size it refuses to attempt.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input document could not be read as a code.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace neuralcode
