#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfast {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTournament : public Error {
 public:
  using Error::Error;
};

class NotAnArc : public Error {
 public:
  using Error::Error;
};

class NotAFeedbackSet : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotBackward : public Error {
 public:
  using Error::Error;
};

class TerminalNotInSpan : public Error {
 public:
  using Error::Error;
};

class OrderNotRegular : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ProviderFailure : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

/// Parse failure in an instance, witness or trace file. `line()` is 1-based;
/// 0 means the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sfast
