#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agentfact/agents/prompt_template.hpp"
#include "agentfact/core/schema.hpp"
#include "agentfact/providers/provider.hpp"

namespace agentfact {

struct AgentConfig {
  // Re-asks after a rejected response; total attempts = 1 + retry_budget.
  int retry_budget = 2;
  int max_validation_items = 3;
  int max_search_items = 3;
  double temperature = 0.0;
};

// One validated operation per agent role. Stateless apart from the provider
// handle, so instances are safe to share across claims.
class AgentRuntime {
 public:
  explicit AgentRuntime(std::shared_ptr<ChatProvider> chat, AgentConfig config = {});

  Plan plan(const MultimodalClaim& claim, const std::optional<ReasoningOutput>& previous) const;

  // Empty items produce no provider call and no queries. Queries are truncated
  // to one per item; repeats of prior queries are dropped (case-insensitive).
  std::vector<std::string> generate_queries(const std::vector<std::string>& items,
                                            const MultimodalClaim& claim,
                                            const std::vector<std::string>& prior_queries) const;

  // Empty results produce no provider call and no summaries. Every summary's
  // source_url must be one of the supplied result URLs.
  SummaryList filter_and_summarize(const std::string& query, const MultimodalClaim& claim,
                                   const std::vector<SearchResult>& results) const;

  ReliabilityAssessment assess_source_reliability(const std::string& url) const;

  IrMatchOutput analyze_image_relationship(const std::string& post_image,
                                           const MultimodalClaim& claim,
                                           const ReverseImageMatch& match) const;

  MiscaptionAssessment detect_miscaption(const MultimodalClaim& claim,
                                         const std::string& post_image,
                                         const std::string& match_context) const;

  // Temporary mode requires a non-empty evidence batch. Cited ids must come
  // from the supplied evidence (text) and image analysis (image).
  ReasoningOutput reason(const MultimodalClaim& claim, const Plan& plan,
                         const std::vector<EvidenceItem>& evidence,
                         const std::optional<ImageAnalysisResult>& image_analysis,
                         ReasoningMode mode,
                         const std::optional<ReasoningOutput>& previous) const;

  Explanation generate_explanation(const MultimodalClaim& claim,
                                   const ReasoningOutput& reasoning,
                                   const std::vector<EvidenceItem>& evidence,
                                   const std::optional<ImageAnalysisResult>& image_analysis) const;

  PostExtraction extract_post(const std::string& article_text) const;
  RationaleExtraction extract_rationale(const std::string& article_text,
                                        const std::string& raw_label) const;
  EvidenceExtraction extract_evidence_for_key_point(const std::string& article_text,
                                                    const std::string& key_point) const;
  NecessityCheck check_image_necessity(const std::string& claim_text) const;
  WatermarkCheck check_watermark(const std::string& claim_text,
                                 const std::string& image_ref) const;

  const AgentConfig& config() const { return config_; }

 private:
  // Renders, calls, validates; re-asks with the violation appended until the
  // retry budget runs out, then rethrows the last SchemaViolation.
  AgentOutput call_validated(
      const std::string& tid, const std::map<std::string, std::string>& bindings,
      const std::vector<std::string>& attachments,
      const std::function<void(const AgentOutput&)>& extra_check = nullptr) const;

  std::shared_ptr<ChatProvider> chat_;
  AgentConfig config_;
};

}  // namespace agentfact
