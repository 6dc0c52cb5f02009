#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypergen {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  // 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A metric is undefined for the given input (too few edges, empty graph...).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class EmptyEligibleSetError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Prompt template could not be instantiated; field() names the missing piece.
class TemplateError : public Error {
 public:
  explicit TemplateError(std::string field)
      : Error("missing template field: " + field), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Remote backend refused the credential (or none was configured). Never retried.
class CredentialError : public Error {
 public:
  using Error::Error;
};

// Network failure, non-retryable HTTP status, or retry budget exhausted.
class TransportError : public Error {
 public:
  using Error::Error;
};

// The server answered 2xx but the body is not a chat completion.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypergen
