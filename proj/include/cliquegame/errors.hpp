#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquegame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or circuit text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact oracle was asked for an instance beyond its configured size limit.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition (k out of range, length mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Game inputs do not satisfy the game's promise.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

// The protocol could not proceed: the separation invariant broke mid-run.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Randomized threshold construction failed or would be too large to verify.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cliquegame
