#pragma once

#include <stdexcept>
#include <string>

namespace thinpath {

// Malformed structure: unknown ids, out-of-range vertices, broken invariants.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input (JSON, CLI, unsupported model for an algorithm).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of its state budget before proving an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("state budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

// Geometric degeneracy, e.g. coincident points where a ratio needs a positive
// denominator.
class DegenerateInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thinpath
