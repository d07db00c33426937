#include "agentfact/providers/budget.hpp"

#include "agentfact/errors.hpp"

namespace agentfact {

void CallBudget::charge() {
  std::lock_guard lock(mutex_);
  if (used_ >= limit_) throw BudgetExceeded(limit_);
  ++used_;
}

int CallBudget::used() const {
  std::lock_guard lock(mutex_);
  return used_;
}

}  // namespace agentfact
