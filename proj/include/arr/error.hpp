#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arr {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error from the polynomial or ideal-file parser; pos is a 0-based
// offset into the offending text.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Thrown when a step-budgeted computation runs out of budget. Callers that
// fold many subproblems catch this and keep the partial accumulator.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace arr
