#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gotzmann {

/// Caller violated an operation's precondition (bad shape, wrong ring, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A growth value or lexsegment was requested outside the range where it is
/// defined, e.g. more monomials than the degree stratum holds.
class DefinednessError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request falls in a parameter regime where no claim is made.
class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive search would exceed the configured subset budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t subsets, std::uint64_t budget)
      : std::runtime_error("search space of " + std::to_string(subsets) +
                           " subsets exceeds budget " + std::to_string(budget)),
        subsets_(subsets),
        budget_(budget) {}

  std::uint64_t subsets() const noexcept { return subsets_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t subsets_;
  std::uint64_t budget_;
};

/// Malformed text input; line is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gotzmann
