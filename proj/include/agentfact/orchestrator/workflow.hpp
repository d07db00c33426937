#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agentfact/agents/agents.hpp"
#include "agentfact/core/types.hpp"
#include "agentfact/filter/evidence_filter.hpp"
#include "agentfact/orchestrator/trace.hpp"
#include "agentfact/providers/provider.hpp"

namespace agentfact {

struct WorkflowConfig {
  // Unconsumed admitted evidence triggering an evidence-selection pass.
  int evidence_batch_threshold = 3;
  // A non-Unproven verdict at or above this sufficiency ends the run.
  int confidence_threshold = 4;
  // Cap on accumulated reasoning invocations per claim.
  int max_reasoning_steps = 12;
  // Extra planning rounds after the initial plan is exhausted.
  int max_replans = 2;
  int max_results_per_query = 10;
  // Chat calls per claim run.
  int chat_call_budget = 60;
  bool strict_dates = false;
  AgentConfig agent;
};

struct WorkflowState {
  EvidencePool reliable_pool{PoolRole::Reliable, {}};
  EvidencePool useful_pool{PoolRole::Useful, {}};
  int step_count = 0;    // accumulated reasoning invocations so far
  int replan_count = 0;
  int round = 0;         // retrieval rounds issued (text rounds start at 1)
  std::vector<std::string> used_queries;
  std::vector<ReasoningOutput> reasoning_history;  // accumulated outputs only
  std::optional<ReasoningOutput> latest_accumulated;
};

struct RunResult {
  Explanation explanation;
  WorkflowTrace trace;
  WorkflowState state;
  int chat_calls_used = 0;
  std::string termination_reason;  // "confidence", "step_cap" or "exhausted"
};

class Orchestrator {
 public:
  Orchestrator(ProviderSet providers, DomainBlocklist blocklist, WorkflowConfig config = {});

  // Runs the full plan/retrieve/reason/explain loop for one claim. Throws
  // WorkflowError (carrying the partial trace) on unrecoverable failures.
  RunResult run_claim(const MultimodalClaim& claim) const;

  static bool should_terminate(const ReasoningOutput& latest, const WorkflowState& state,
                               const WorkflowConfig& config);

  struct ImageBranchOutcome {
    ImageAnalysisResult analysis;
    std::vector<EvidenceItem> evidence;  // admitted image evidence items
  };

  // Reverse search, relationship matching, tampering, miscaption, deepfake.
  // Throws on provider failure; run_claim degrades that to an absent result.
  ImageBranchOutcome run_image_branch(const MultimodalClaim& claim, const AgentRuntime& agents,
                                      WorkflowTrace& trace) const;

  const WorkflowConfig& config() const { return config_; }

 private:
  ProviderSet providers_;
  DomainBlocklist blocklist_;
  WorkflowConfig config_;
};

}  // namespace agentfact
