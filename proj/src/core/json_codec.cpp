#include "agentfact/core/json_codec.hpp"

#include "agentfact/util/dates.hpp"

namespace agentfact {

using nlohmann::json;

namespace {

json date_to_json(const std::optional<util::Date>& d) {
  if (!d) return nullptr;
  return util::format_date(*d);
}

std::optional<util::Date> date_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return util::parse_date(j.get<std::string>());
}

json opt_to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> opt_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

void to_json(json& j, const MultimodalClaim& c) {
  j = {{"claim_id", c.claim_id},
       {"text", c.text},
       {"post_text", c.post_text},
       {"image_ref", c.image_ref ? json(*c.image_ref) : json(nullptr)},
       {"claim_date", date_to_json(c.claim_date)},
       {"metadata", c.metadata}};
}

void from_json(const json& j, MultimodalClaim& c) {
  c.claim_id = j.at("claim_id").get<std::string>();
  c.text = j.at("text").get<std::string>();
  c.post_text = j.value("post_text", c.text);
  if (j.contains("image_ref") && !j.at("image_ref").is_null())
    c.image_ref = j.at("image_ref").get<std::string>();
  else
    c.image_ref.reset();
  c.claim_date = j.contains("claim_date") ? date_from_json(j.at("claim_date")) : std::nullopt;
  c.metadata = j.value("metadata", std::map<std::string, std::string>{});
}

void to_json(json& j, const EvidenceItem& e) {
  j = {{"evidence_id", e.evidence_id},
       {"modality", to_string(e.modality)},
       {"content", e.content},
       {"source_url", e.source_url},
       {"publish_date", date_to_json(e.publish_date)},
       {"reliability", to_string(e.reliability)},
       {"origin_query", e.origin_query}};
}

void from_json(const json& j, EvidenceItem& e) {
  e.evidence_id = j.at("evidence_id").get<std::string>();
  e.modality = modality_from_string(j.at("modality").get<std::string>());
  e.content = j.at("content").get<std::string>();
  e.source_url = j.at("source_url").get<std::string>();
  e.publish_date = date_from_json(j.at("publish_date"));
  e.reliability = reliability_from_string(j.at("reliability").get<std::string>());
  e.origin_query = j.at("origin_query").get<std::string>();
}

void to_json(json& j, const Plan& p) {
  json steps = json::array();
  for (const auto& s : p.reasoning_steps)
    steps.push_back({{"step", s.step}, {"method", s.method}, {"details", s.details}});
  json validation = json::array();
  for (const auto& v : p.validation_list)
    validation.push_back({{"sentence", v.sentence}, {"explanation", v.explanation}});
  json search = json::array();
  for (const auto& s : p.search_list)
    search.push_back({{"information_needed", s.information_needed}});
  j = {{"reasoning_steps", steps}, {"validation_list", validation}, {"search_list", search}};
}

void from_json(const json& j, Plan& p) {
  p = {};
  for (const auto& s : j.at("reasoning_steps"))
    p.reasoning_steps.push_back({s.at("step").get<std::string>(),
                                 s.at("method").get<std::string>(),
                                 s.at("details").get<std::string>()});
  for (const auto& v : j.at("validation_list"))
    p.validation_list.push_back(
        {v.at("sentence").get<std::string>(), v.at("explanation").get<std::string>()});
  for (const auto& s : j.at("search_list"))
    p.search_list.push_back({s.at("information_needed").get<std::string>()});
}

void to_json(json& j, const ImageMatchAnalysis& m) {
  j = {{"evidence_id", m.evidence_id},
       {"page_url", m.page_url},
       {"relationship", to_string(m.relationship)},
       {"relationship_reasoning", m.relationship_reasoning},
       {"tampering_probability", opt_to_json(m.tampering_probability)},
       {"tampering_reasoning", m.tampering_reasoning},
       {"confidence", m.confidence}};
}

void from_json(const json& j, ImageMatchAnalysis& m) {
  m.evidence_id = j.at("evidence_id").get<std::string>();
  m.page_url = j.at("page_url").get<std::string>();
  m.relationship = relationship_from_string(j.at("relationship").get<std::string>());
  m.relationship_reasoning = j.at("relationship_reasoning").get<std::string>();
  m.tampering_probability = opt_from_json(j.at("tampering_probability"));
  m.tampering_reasoning = j.at("tampering_reasoning").get<std::string>();
  m.confidence = j.at("confidence").get<int>();
}

void to_json(json& j, const ImageAnalysisResult& r) {
  j = {{"matches", r.matches},
       {"tampering_score", opt_to_json(r.tampering_score)},
       {"miscaption_score", opt_to_json(r.miscaption_score)},
       {"deepfake_score", opt_to_json(r.deepfake_score)}};
}

void from_json(const json& j, ImageAnalysisResult& r) {
  r.matches = j.at("matches").get<std::vector<ImageMatchAnalysis>>();
  r.tampering_score = opt_from_json(j.at("tampering_score"));
  r.miscaption_score = opt_from_json(j.at("miscaption_score"));
  r.deepfake_score = opt_from_json(j.at("deepfake_score"));
}

void to_json(json& j, const ReasoningOutput& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"step_name", s.step_name},
                     {"description", s.description},
                     {"analysis_result", s.analysis_result},
                     {"relevant_evidence_summary", s.relevant_evidence_summary},
                     {"relevant_text_evidence_ids", s.relevant_text_evidence_ids},
                     {"relevant_image_evidence_ids", s.relevant_image_evidence_ids},
                     {"knowledge_notes", s.knowledge_notes}});
  j = {{"mode", r.mode == ReasoningMode::Temporary ? "temporary" : "accumulated"},
       {"claim_understanding", r.claim_understanding},
       {"steps", steps},
       {"direct",
        {{"analysis_result", r.direct.analysis_result},
         {"relevant_evidence_summary", r.direct.relevant_evidence_summary},
         {"relevant_text_evidence_ids", r.direct.relevant_text_evidence_ids}}},
       {"label", to_string(r.label)},
       {"confidence", r.confidence}};
}

void from_json(const json& j, ReasoningOutput& r) {
  r = {};
  r.mode = j.at("mode").get<std::string>() == "temporary" ? ReasoningMode::Temporary
                                                          : ReasoningMode::Accumulated;
  r.claim_understanding = j.at("claim_understanding").get<std::string>();
  for (const auto& s : j.at("steps")) {
    ReasoningStepDetail d;
    d.step_name = s.at("step_name").get<std::string>();
    d.description = s.at("description").get<std::string>();
    d.analysis_result = s.at("analysis_result").get<std::string>();
    d.relevant_evidence_summary = s.at("relevant_evidence_summary").get<std::string>();
    d.relevant_text_evidence_ids =
        s.at("relevant_text_evidence_ids").get<std::vector<std::string>>();
    d.relevant_image_evidence_ids =
        s.at("relevant_image_evidence_ids").get<std::vector<std::string>>();
    d.knowledge_notes = s.at("knowledge_notes").get<std::vector<std::string>>();
    r.steps.push_back(std::move(d));
  }
  const auto& direct = j.at("direct");
  r.direct.analysis_result = direct.at("analysis_result").get<std::string>();
  r.direct.relevant_evidence_summary =
      direct.at("relevant_evidence_summary").get<std::string>();
  r.direct.relevant_text_evidence_ids =
      direct.at("relevant_text_evidence_ids").get<std::vector<std::string>>();
  r.label = veracity_from_string(j.at("label").get<std::string>());
  r.confidence = j.at("confidence").get<int>();
}

void to_json(json& j, const KeyPoint& k) {
  j = {{"text", k.text}, {"cited_evidence_ids", k.cited_evidence_ids}};
}

void from_json(const json& j, KeyPoint& k) {
  k.text = j.at("text").get<std::string>();
  k.cited_evidence_ids = j.at("cited_evidence_ids").get<std::vector<std::string>>();
}

void to_json(json& j, const Explanation& e) {
  j = {{"claim_id", e.claim_id},
       {"claim_understanding", e.claim_understanding},
       {"binary_label", to_string(e.binary_label)},
       {"label", to_string(e.label)},
       {"reasoning_logic", e.reasoning_logic},
       {"key_points", e.key_points},
       {"evidence", e.evidence},
       {"image_analysis", e.image_analysis ? json(*e.image_analysis) : json(nullptr)},
       {"confidence", e.confidence}};
}

void from_json(const json& j, Explanation& e) {
  e.claim_id = j.at("claim_id").get<std::string>();
  e.claim_understanding = j.at("claim_understanding").get<std::string>();
  e.binary_label = binary_from_string(j.at("binary_label").get<std::string>());
  e.label = veracity_from_string(j.at("label").get<std::string>());
  e.reasoning_logic = j.at("reasoning_logic").get<std::string>();
  e.key_points = j.at("key_points").get<std::vector<KeyPoint>>();
  e.evidence = j.at("evidence").get<std::vector<EvidenceItem>>();
  if (j.at("image_analysis").is_null())
    e.image_analysis.reset();
  else
    e.image_analysis = j.at("image_analysis").get<ImageAnalysisResult>();
  e.confidence = j.at("confidence").get<int>();
}

void to_json(json& j, const SearchResult& r) {
  j = {{"url", r.url},
       {"title", r.title},
       {"snippet", r.snippet},
       {"publish_date", date_to_json(r.publish_date)}};
}

void from_json(const json& j, SearchResult& r) {
  r.url = j.at("url").get<std::string>();
  r.title = j.value("title", std::string{});
  r.snippet = j.value("snippet", std::string{});
  r.publish_date =
      j.contains("publish_date") ? date_from_json(j.at("publish_date")) : std::nullopt;
}

void to_json(json& j, const ReverseImageMatch& m) {
  j = {{"image_url", m.image_url},
       {"page_url", m.page_url},
       {"page_title", m.page_title},
       {"page_text", m.page_text}};
}

void from_json(const json& j, ReverseImageMatch& m) {
  m.image_url = j.at("image_url").get<std::string>();
  m.page_url = j.at("page_url").get<std::string>();
  m.page_title = j.value("page_title", std::string{});
  m.page_text = j.value("page_text", std::string{});
}

}  // namespace agentfact
