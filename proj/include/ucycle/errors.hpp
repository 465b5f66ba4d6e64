#pragma once

#include <stdexcept>
#include <string>

namespace ucycle {

// Invalid class parameterization (empty class, out-of-range counts).
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// Caller broke an interface contract (wrong word length, letter out of range).
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed the candidate-enumeration budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ucycle
