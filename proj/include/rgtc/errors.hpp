#pragma once

#include <stdexcept>
#include <string>

namespace rgtc {

/// Invalid argument or input outside an operation's domain. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A node budget, enumeration cap or |D| cap was exceeded. Maps to CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rgtc
