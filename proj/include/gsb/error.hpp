#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol id outside the alphabet it is compared or printed against.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

// Raised by as_rule() and the word-level rewriting path when an element is
// not of the form u - v.
class NotBinomial : public Error {
 public:
  using Error::Error;
};

// Index arguments outside the x_{i,j} / x'_{i,j} conventions.
class RangeError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

// A count or normal form requested from a basis that failed closure.
class Unverified : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gsb
