#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qdiscord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Populations of an X state do not sum to one.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// An X state fails one of the 2x2 block positivity conditions.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (non-finite input, |x| > 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// POVM weights on (or outside) the edge of the admissible triangle region.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Measurement outcome with vanishing probability; its entropy term is undefined.
class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed state file. Carries the 1-based line and, when known, the record name.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, std::string record = {})
      : Error(what), line_(line), record_(std::move(record)) {}

  int line() const noexcept { return line_; }
  const std::string& record() const noexcept { return record_; }

 private:
  int line_;
  std::string record_;
};

}  // namespace qdiscord
