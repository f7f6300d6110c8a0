#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace n2c {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: unknown vertex, malformed cycle, ineligible vertex, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural precondition of one of the cycle constructions failed.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DisconnectedError : public DomainError {
 public:
  DisconnectedError(const std::string& what, std::size_t first_rep,
                    std::size_t second_rep)
      : DomainError(what), first_(first_rep), second_(second_rep) {}

  // Representatives (vertex ids) of two distinct components.
  std::size_t first_representative() const noexcept { return first_; }
  std::size_t second_representative() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

// A size guard or search budget was exceeded. Never a wrong answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace n2c
