#include "agentfact/orchestrator/trace.hpp"

namespace agentfact {

void WorkflowTrace::add(const std::string& event, nlohmann::json payload) {
  nlohmann::json entry = {{"seq", events_.size()}, {"event", event}};
  for (auto& [k, v] : payload.items()) entry[k] = std::move(v);
  events_.push_back(std::move(entry));
}

std::vector<nlohmann::json> WorkflowTrace::events_named(const std::string& event) const {
  std::vector<nlohmann::json> out;
  for (const auto& e : events_)
    if (e.at("event") == event) out.push_back(e);
  return out;
}

bool WorkflowTrace::has_event(const std::string& event) const {
  for (const auto& e : events_)
    if (e.at("event") == event) return true;
  return false;
}

std::string WorkflowTrace::to_jsonl() const {
  std::string out;
  for (const auto& e : events_) {
    out += e.dump();
    out += '\n';
  }
  return out;
}

}  // namespace agentfact
