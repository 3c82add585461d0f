#pragma once

#include <cstdint>
#include <optional>

namespace dimjump {

// Scoped cap on the number of elementary steps (reductions, enumerated
// monomials) the engine may perform on the current thread. Nested scopes
// restore the outer limit on exit. Without a scope the engine is unbounded.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t steps);
  ~WorkBudget();
  WorkBudget(const WorkBudget&) = delete;
  WorkBudget& operator=(const WorkBudget&) = delete;

  // Throws ResourceLimit when the active budget is exhausted.
  static void charge(std::uint64_t steps = 1);
  static std::optional<std::uint64_t> remaining();

 private:
  std::optional<std::uint64_t> saved_;
  std::uint64_t granted_;
};

}  // namespace dimjump
