#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/errors.hpp"

namespace agentfact {

// Append-only run log. Events carry no timestamps so a replayed run is
// byte-identical to the run that recorded it.
class WorkflowTrace {
 public:
  void add(const std::string& event, nlohmann::json payload = nlohmann::json::object());

  const std::vector<nlohmann::json>& events() const { return events_; }
  std::vector<nlohmann::json> events_named(const std::string& event) const;
  bool has_event(const std::string& event) const;

  // One compact JSON object per line.
  std::string to_jsonl() const;

 private:
  std::vector<nlohmann::json> events_;
};

// Any failure inside a claim run, wrapped together with the partial trace.
class WorkflowError : public Error {
 public:
  WorkflowError(std::string cause_kind, const std::string& message, WorkflowTrace trace)
      : Error(message), cause_kind_(std::move(cause_kind)), trace_(std::move(trace)) {}

  const std::string& cause_kind() const noexcept { return cause_kind_; }
  const WorkflowTrace& trace() const noexcept { return trace_; }

 private:
  std::string cause_kind_;
  WorkflowTrace trace_;
};

}  // namespace agentfact
