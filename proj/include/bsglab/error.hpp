#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsglab {

// Raised when an operation's precondition does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation would exceed a configured work or memory cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void RequireBudget(bool ok, const std::string& what) {
  if (!ok) throw BudgetError(what);
}

// Default caps. The CLI may override them through --budget or BSGLAB_BUDGET.
inline constexpr int64_t kDenseSpanLimit = 100'000'000;
inline constexpr int64_t kPairWorkLimit = 2'000'000'000;

}  // namespace bsglab
