// Error types shared across the library.
//
// Every failure surfaces as an exception; no operation reports "probably
// fine".  Domain violations (bad input, impossible request) throw Error,
// text-input problems throw ParseError with a position, and computations
// whose truncation window is too small to decide anything throw
// TruncationError instead of returning a misleading answer.

#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the polynomial (and rational-literal) parsers.  `position` is a
// 0-based byte offset into the offending input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Raised when a truncated computation cannot decide the question asked:
// the caller must retry with a larger window.  Never silently swallowed.
class TruncationError : public Error {
public:
  explicit TruncationError(const std::string& what) : Error(what) {}
};

}  // namespace polyharm
