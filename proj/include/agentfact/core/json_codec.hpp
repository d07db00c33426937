#pragma once

#include <nlohmann/json.hpp>

#include "agentfact/core/types.hpp"

// Canonical JSON forms for the domain types. from_json(to_json(x)) == x.
// Optional fields serialize as null; dates as "YYYY-MM-DD" strings.
namespace agentfact {

void to_json(nlohmann::json& j, const MultimodalClaim& c);
void from_json(const nlohmann::json& j, MultimodalClaim& c);

void to_json(nlohmann::json& j, const EvidenceItem& e);
void from_json(const nlohmann::json& j, EvidenceItem& e);

void to_json(nlohmann::json& j, const Plan& p);
void from_json(const nlohmann::json& j, Plan& p);

void to_json(nlohmann::json& j, const ImageMatchAnalysis& m);
void from_json(const nlohmann::json& j, ImageMatchAnalysis& m);

void to_json(nlohmann::json& j, const ImageAnalysisResult& r);
void from_json(const nlohmann::json& j, ImageAnalysisResult& r);

void to_json(nlohmann::json& j, const ReasoningOutput& r);
void from_json(const nlohmann::json& j, ReasoningOutput& r);

void to_json(nlohmann::json& j, const KeyPoint& k);
void from_json(const nlohmann::json& j, KeyPoint& k);

void to_json(nlohmann::json& j, const Explanation& e);
void from_json(const nlohmann::json& j, Explanation& e);

void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);

void to_json(nlohmann::json& j, const ReverseImageMatch& m);
void from_json(const nlohmann::json& j, ReverseImageMatch& m);

}  // namespace agentfact
