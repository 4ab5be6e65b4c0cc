#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace regulus {

// Malformed input: unknown ids, non-total maps, shape mismatches.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The instance exceeds the configured search/enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a checking predicate. `ok == false` carries a human readable
// report naming the first offending item.
struct Verdict {
  bool ok = true;
  std::string violation;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace regulus
