#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/core/types.hpp"

namespace agentfact {

// Schema ids carried on chat requests so replay and validation agree on the
// expected response shape.
namespace schema_id {
inline constexpr const char* kPlan = "sp";
inline constexpr const char* kQuery = "tr-query";
inline constexpr const char* kSummarize = "tr-summarize";
inline constexpr const char* kReliability = "tr-reliability";
inline constexpr const char* kReasoning = "r";
inline constexpr const char* kIrMatch = "ir-match";
inline constexpr const char* kIrMiscaption = "ir-miscaption";
inline constexpr const char* kExplanation = "eg";
inline constexpr const char* kCorpusPost = "corpus-post";
inline constexpr const char* kCorpusRationale = "corpus-rationale";
inline constexpr const char* kCorpusEvidence = "corpus-evidence";
inline constexpr const char* kQcNecessity = "qc-necessity";
inline constexpr const char* kQcWatermark = "qc-watermark";
}  // namespace schema_id

struct QueryList {
  std::vector<std::string> queries;
  bool operator==(const QueryList&) const = default;
};

struct SummaryList {
  std::vector<EvidenceSummary> summaries;
  bool operator==(const SummaryList&) const = default;
};

struct IrMatchOutput {
  ImageRelationship relationship = ImageRelationship::NoClose;
  std::string relationship_reasoning;
  std::optional<double> tampering_probability;  // percent; absent iff NoClose
  std::string tampering_reasoning;
  int confidence = 1;
  bool operator==(const IrMatchOutput&) const = default;
};

struct EgOutput {
  std::string claim_understanding;
  BinaryLabel binary_label = BinaryLabel::NotTrue;
  VeracityLabel label = VeracityLabel::Unproven;
  std::string reasoning_logic;
  std::vector<std::string> key_points;  // raw strings, citations still embedded
  int confidence = 1;
  bool operator==(const EgOutput&) const = default;
};

struct PostExtraction {
  std::string post_text;
  std::vector<std::string> post_media;
  bool operator==(const PostExtraction&) const = default;
};

struct RationaleExtraction {
  std::string reasoning_logic;
  std::vector<std::string> key_points;
  bool operator==(const RationaleExtraction&) const = default;
};

struct EvidenceExtraction {
  struct Entry {
    std::string description;
    std::vector<std::string> links;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> evidence;
  bool operator==(const EvidenceExtraction&) const = default;
};

struct NecessityCheck {
  std::string image_required;  // normalized to yes|no|unsure
  std::string reason;
  bool operator==(const NecessityCheck&) const = default;
};

struct WatermarkCheck {
  bool watermarked = false;
  std::vector<std::string> matched_keywords;
  std::string reason;
  bool operator==(const WatermarkCheck&) const = default;
};

using AgentOutput =
    std::variant<Plan, QueryList, SummaryList, ReliabilityAssessment, ReasoningOutput,
                 IrMatchOutput, MiscaptionAssessment, EgOutput, PostExtraction,
                 RationaleExtraction, EvidenceExtraction, NecessityCheck, WatermarkCheck>;

// Parses a raw model response (optionally wrapped in a markdown fence) and
// validates it against the named schema. Unknown fields are tolerated;
// missing or ill-typed required fields raise SchemaViolation with the field
// path. Percentages accept numbers or strings with an optional trailing '%';
// confidence fields accept integers or integer-valued strings in [1,5].
AgentOutput validate_agent_output(const std::string& raw, const std::string& schema_id);

// Regex extraction of "<round>-<ordinal>" evidence ids embedded in free text.
std::vector<std::string> extract_evidence_ids(std::string_view text);

// Serializers back to the wire schemas (numeric fields as strings, matching
// the format the prompts ask for). validate(serialize(x)) reproduces x.
nlohmann::json to_schema_json(const Plan&);
nlohmann::json to_schema_json(const QueryList&);
nlohmann::json to_schema_json(const SummaryList&);
nlohmann::json to_schema_json(const ReliabilityAssessment&);
nlohmann::json to_schema_json(const ReasoningOutput&);
nlohmann::json to_schema_json(const IrMatchOutput&);
nlohmann::json to_schema_json(const MiscaptionAssessment&);
nlohmann::json to_schema_json(const EgOutput&);
nlohmann::json to_schema_json(const PostExtraction&);
nlohmann::json to_schema_json(const RationaleExtraction&);
nlohmann::json to_schema_json(const EvidenceExtraction&);
nlohmann::json to_schema_json(const NecessityCheck&);
nlohmann::json to_schema_json(const WatermarkCheck&);

}  // namespace agentfact
