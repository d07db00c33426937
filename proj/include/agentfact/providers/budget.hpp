#pragma once

#include <memory>
#include <mutex>

#include "agentfact/providers/provider.hpp"

namespace agentfact {

// Counts chat calls for one claim run; charge() throws once the limit is hit.
class CallBudget {
 public:
  explicit CallBudget(int limit) : limit_(limit) {}

  void charge();
  int used() const;
  int limit() const { return limit_; }

 private:
  int limit_;
  mutable std::mutex mutex_;
  int used_ = 0;
};

class BudgetedChatProvider : public ChatProvider {
 public:
  BudgetedChatProvider(std::shared_ptr<ChatProvider> inner, std::shared_ptr<CallBudget> budget)
      : inner_(std::move(inner)), budget_(std::move(budget)) {}

  std::string chat(const ChatRequest& request) override {
    budget_->charge();
    return inner_->chat(request);
  }

 private:
  std::shared_ptr<ChatProvider> inner_;
  std::shared_ptr<CallBudget> budget_;
};

}  // namespace agentfact
