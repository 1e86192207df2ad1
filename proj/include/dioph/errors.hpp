#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// Exit-code categories used by the CLI: 2 = budget, 3 = hypothesis, 4 = undecidable.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg, unsigned long long required = 0)
      : std::runtime_error(msg), required_budget(required) {}
  unsigned long long required_budget;
};

struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndecidableComparison : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dioph
