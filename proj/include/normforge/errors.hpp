#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace normforge {

// Input outside an operation's admissible domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive kernel would exceed its enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown suite, subcommand or parameter.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or invalid serialized input. `position` is a byte offset for
// syntax errors and a JSON-pointer-ish location for semantic ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string position)
      : std::runtime_error(what + " (at " + position + ")"), position_(std::move(position)) {}

  const std::string& position() const noexcept { return position_; }

 private:
  std::string position_;
};

}  // namespace normforge
