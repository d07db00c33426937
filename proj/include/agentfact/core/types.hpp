#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agentfact/core/labels.hpp"
#include "agentfact/util/dates.hpp"

namespace agentfact {

struct MultimodalClaim {
  std::string claim_id;
  std::string text;       // the checkable claim sentence(s)
  std::string post_text;  // original post wording, may equal text
  std::optional<std::string> image_ref;  // local path or URL
  std::optional<util::Date> claim_date;
  std::map<std::string, std::string> metadata;

  bool operator==(const MultimodalClaim&) const = default;
};

enum class Modality { Text, Image };

std::string to_string(Modality m);
Modality modality_from_string(std::string_view s);

struct EvidenceItem {
  std::string evidence_id;  // "<round>-<ordinal>", image branch uses round 0
  Modality modality = Modality::Text;
  std::string content;
  std::string source_url;
  std::optional<util::Date> publish_date;
  SourceReliability reliability = SourceReliability::Unsure;
  std::string origin_query;

  bool operator==(const EvidenceItem&) const = default;
};

enum class PoolRole { Reliable, Useful };

struct EvidencePool {
  PoolRole role = PoolRole::Reliable;
  std::vector<EvidenceItem> items;

  bool contains(std::string_view evidence_id) const;
  const EvidenceItem* find(std::string_view evidence_id) const;
  // Enforces evidence_id uniqueness; throws std::invalid_argument on duplicates.
  void add(EvidenceItem item);
  size_t size() const { return items.size(); }
};

struct PlanStep {
  std::string step;
  std::string method;
  std::string details;
  bool operator==(const PlanStep&) const = default;
};

struct ValidationItem {
  std::string sentence;
  std::string explanation;
  bool operator==(const ValidationItem&) const = default;
};

struct SearchItem {
  std::string information_needed;
  bool operator==(const SearchItem&) const = default;
};

struct Plan {
  std::vector<PlanStep> reasoning_steps;
  std::vector<ValidationItem> validation_list;
  std::vector<SearchItem> search_list;
  bool operator==(const Plan&) const = default;
};

struct SearchResult {
  std::string url;
  std::string title;
  std::string snippet;
  std::optional<util::Date> publish_date;
  bool operator==(const SearchResult&) const = default;
};

struct EvidenceSummary {
  std::string source_url;
  std::string summary;
  bool operator==(const EvidenceSummary&) const = default;
};

struct ReliabilityAssessment {
  std::string source_identification;
  SourceReliability type = SourceReliability::Unsure;
  std::string reasoning;
  std::string fact_checker_usage;
  bool operator==(const ReliabilityAssessment&) const = default;
};

struct ReverseImageMatch {
  std::string image_url;
  std::string page_url;
  std::string page_title;
  std::string page_text;
  bool operator==(const ReverseImageMatch&) const = default;
};

struct ImageMatchAnalysis {
  std::string evidence_id;  // image evidence id this match was admitted as
  std::string page_url;
  ImageRelationship relationship = ImageRelationship::NoClose;
  std::string relationship_reasoning;
  std::optional<double> tampering_probability;  // percent, absent for NoClose
  std::string tampering_reasoning;
  int confidence = 1;  // 1..5
  bool operator==(const ImageMatchAnalysis&) const = default;
};

struct ImageAnalysisResult {
  std::vector<ImageMatchAnalysis> matches;
  std::optional<double> tampering_score;   // percent, max over related matches
  std::optional<double> miscaption_score;  // percent, max over context checks
  std::optional<double> deepfake_score;    // probability in [0,1]
  bool operator==(const ImageAnalysisResult&) const = default;
};

struct MiscaptionAssessment {
  std::string claim_understanding;
  double rate = 0.0;  // percent
  std::string reasoning;
  bool operator==(const MiscaptionAssessment&) const = default;
};

enum class ReasoningMode { Temporary, Accumulated };

struct ReasoningStepDetail {
  std::string step_name;
  std::string description;
  std::string analysis_result;
  std::string relevant_evidence_summary;
  std::vector<std::string> relevant_text_evidence_ids;
  std::vector<std::string> relevant_image_evidence_ids;
  std::vector<std::string> knowledge_notes;
  bool operator==(const ReasoningStepDetail&) const = default;
};

struct DirectFactCheckEvidence {
  std::string analysis_result;
  std::string relevant_evidence_summary;
  std::vector<std::string> relevant_text_evidence_ids;
  bool operator==(const DirectFactCheckEvidence&) const = default;
};

struct ReasoningOutput {
  ReasoningMode mode = ReasoningMode::Accumulated;
  std::string claim_understanding;
  std::vector<ReasoningStepDetail> steps;
  DirectFactCheckEvidence direct;
  VeracityLabel label = VeracityLabel::Unproven;
  int confidence = 1;  // final_sufficiency_confidence, 1..5

  // Text evidence ids cited anywhere in the output, in order of first mention.
  std::vector<std::string> cited_text_ids() const;
  std::vector<std::string> cited_image_ids() const;
  bool operator==(const ReasoningOutput&) const = default;
};

struct KeyPoint {
  std::string text;
  std::vector<std::string> cited_evidence_ids;
  bool operator==(const KeyPoint&) const = default;
};

struct Explanation {
  std::string claim_id;
  std::string claim_understanding;
  BinaryLabel binary_label = BinaryLabel::NotTrue;
  VeracityLabel label = VeracityLabel::Unproven;
  std::string reasoning_logic;
  std::vector<KeyPoint> key_points;
  std::vector<EvidenceItem> evidence;
  std::optional<ImageAnalysisResult> image_analysis;
  int confidence = 1;
  bool operator==(const Explanation&) const = default;
};

}  // namespace agentfact
