#include "agentfact/core/schema.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <stdexcept>

#include "agentfact/errors.hpp"
#include "agentfact/util/strings.hpp"

namespace agentfact {

namespace {

using nlohmann::json;

// Hard caps from the planning protocol.
constexpr size_t kMaxValidationItems = 3;
constexpr size_t kMaxSearchItems = 3;

std::string strip_fence(const std::string& raw) {
  std::string s = util::trim(raw);
  if (s.rfind("```", 0) != 0) return s;
  const auto first_nl = s.find('\n');
  if (first_nl == std::string::npos) return s;
  const auto closing = s.rfind("```");
  if (closing <= first_nl) return s;
  return util::trim(s.substr(first_nl + 1, closing - first_nl - 1));
}

std::string child(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string elem(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

json parse_body(const std::string& raw) {
  const std::string body = strip_fence(raw);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw SchemaViolation("$", std::string("response is not valid JSON: ") + e.what());
  }
}

const json& require_field(const json& obj, const std::string& parent, const char* key) {
  if (!obj.is_object())
    throw SchemaViolation(parent.empty() ? "$" : parent, "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaViolation(child(parent, key), "required field missing");
  return *it;
}

std::string as_string(const json& v, const std::string& path, bool allow_empty = true) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_number_integer())
    s = std::to_string(v.get<long long>());
  else if (v.is_number())
    s = std::to_string(v.get<double>());
  else
    throw SchemaViolation(path, "expected a string");
  if (!allow_empty && util::trim(s).empty()) throw SchemaViolation(path, "must not be empty");
  return s;
}

std::string require_string(const json& obj, const std::string& parent, const char* key,
                           bool allow_empty = true) {
  return as_string(require_field(obj, parent, key), child(parent, key), allow_empty);
}

const json& require_array(const json& obj, const std::string& parent, const char* key) {
  const json& v = require_field(obj, parent, key);
  if (!v.is_array()) throw SchemaViolation(child(parent, key), "expected an array");
  return v;
}

const json& require_object(const json& obj, const std::string& parent, const char* key) {
  const json& v = require_field(obj, parent, key);
  if (!v.is_object()) throw SchemaViolation(child(parent, key), "expected an object");
  return v;
}

std::vector<std::string> string_array(const json& arr, const std::string& path,
                                      bool allow_empty_items = false) {
  std::vector<std::string> out;
  for (size_t i = 0; i < arr.size(); ++i)
    out.push_back(as_string(arr[i], elem(path, i), allow_empty_items));
  return out;
}

double parse_percent(const json& v, const std::string& path) {
  double value = 0.0;
  if (v.is_number()) {
    value = v.get<double>();
  } else if (v.is_string()) {
    std::string s = util::trim(v.get<std::string>());
    if (!s.empty() && s.back() == '%') s.pop_back();
    s = util::trim(s);
    if (s.empty()) throw SchemaViolation(path, "expected a percentage");
    try {
      size_t consumed = 0;
      value = std::stod(s, &consumed);
      if (consumed != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw SchemaViolation(path, "expected a percentage, got '" + s + "'");
    }
  } else {
    throw SchemaViolation(path, "expected a percentage");
  }
  if (value < 0.0 || value > 100.0)
    throw SchemaViolation(path, "percentage out of range [0,100]");
  return value;
}

int parse_confidence(const json& v, const std::string& path) {
  double value = 0.0;
  if (v.is_number()) {
    value = v.get<double>();
  } else if (v.is_string()) {
    const std::string s = util::trim(v.get<std::string>());
    try {
      size_t consumed = 0;
      value = std::stod(s, &consumed);
      if (consumed != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw SchemaViolation(path, "expected a confidence score, got '" + s + "'");
    }
  } else {
    throw SchemaViolation(path, "expected a confidence score");
  }
  if (value != std::floor(value)) throw SchemaViolation(path, "confidence must be an integer");
  const int c = static_cast<int>(value);
  if (c < 1 || c > 5) throw SchemaViolation(path, "confidence out of range [1,5]");
  return c;
}

bool field_is_blank(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return true;
  return it->is_string() && util::trim(it->get<std::string>()).empty();
}

Plan validate_sp(const json& j) {
  Plan plan;
  const json& steps = require_array(j, "", "reasoning_steps");
  for (size_t i = 0; i < steps.size(); ++i) {
    const std::string p = elem("reasoning_steps", i);
    plan.reasoning_steps.push_back({require_string(steps[i], p, "step"),
                                    require_string(steps[i], p, "method", false),
                                    require_string(steps[i], p, "details")});
  }
  const json& vs = require_array(j, "", "validation_list");
  if (vs.size() > kMaxValidationItems)
    throw SchemaViolation("validation_list",
                          "more than " + std::to_string(kMaxValidationItems) + " items");
  for (size_t i = 0; i < vs.size(); ++i) {
    const std::string p = elem("validation_list", i);
    plan.validation_list.push_back(
        {require_string(vs[i], p, "sentence", false), require_string(vs[i], p, "explanation")});
  }
  const json& ss = require_array(j, "", "search_list");
  if (ss.size() > kMaxSearchItems)
    throw SchemaViolation("search_list",
                          "more than " + std::to_string(kMaxSearchItems) + " items");
  for (size_t i = 0; i < ss.size(); ++i) {
    const std::string p = elem("search_list", i);
    plan.search_list.push_back({require_string(ss[i], p, "information_needed", false)});
  }
  for (const auto& s : plan.search_list) {
    const std::string needle = util::trim(s.information_needed);
    for (const auto& v : plan.validation_list)
      if (util::trim(v.sentence) == needle)
        throw SchemaViolation("search_list",
                              "overlaps validation_list item: '" + needle + "'");
  }
  return plan;
}

QueryList validate_tr_query(const json& j) {
  return {string_array(require_array(j, "", "queries"), "queries")};
}

SummaryList validate_tr_summarize(const json& j) {
  SummaryList out;
  const json& arr = require_array(j, "", "summaries");
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string p = elem("summaries", i);
    out.summaries.push_back({require_string(arr[i], p, "source_url", false),
                             require_string(arr[i], p, "summary", false)});
  }
  return out;
}

ReliabilityAssessment validate_tr_reliability(const json& j) {
  ReliabilityAssessment out;
  out.source_identification = require_string(j, "", "source_identification", false);
  const std::string type = require_string(j, "", "type", false);
  try {
    out.type = reliability_from_string(type);
  } catch (const std::invalid_argument&) {
    throw SchemaViolation("type", "unknown reliability type '" + type + "'");
  }
  out.reasoning = require_string(j, "", "reasoning");
  out.fact_checker_usage = require_string(j, "", "fact_checker_usage");
  return out;
}

ReasoningStepDetail validate_r_step(const json& s, const std::string& p) {
  ReasoningStepDetail step;
  step.step_name = require_string(s, p, "step_name", false);
  step.description = require_string(s, p, "description");
  step.analysis_result = require_string(s, p, "analysis_result");
  step.relevant_evidence_summary = require_string(s, p, "relevant_evidence_summary");
  step.relevant_text_evidence_ids =
      string_array(require_array(s, p, "relevant_text_evidence_list"),
                   child(p, "relevant_text_evidence_list"));
  step.relevant_image_evidence_ids =
      string_array(require_array(s, p, "relevant_image_evidence_list"),
                   child(p, "relevant_image_evidence_list"));
  step.knowledge_notes = string_array(require_array(s, p, "evidence_based_on_my_knowledge"),
                                      child(p, "evidence_based_on_my_knowledge"));
  return step;
}

ReasoningOutput validate_r(const json& j) {
  ReasoningOutput out;
  out.claim_understanding = require_string(j, "", "my_understanding_of_claim");
  const json& vr = require_object(j, "", "validation_result");
  const json& steps = require_array(vr, "validation_result", "reasoning_steps");
  if (steps.empty())
    throw SchemaViolation("validation_result.reasoning_steps", "must contain at least one step");
  for (size_t i = 0; i < steps.size(); ++i)
    out.steps.push_back(
        validate_r_step(steps[i], elem("validation_result.reasoning_steps", i)));
  const json& direct = require_object(vr, "validation_result", "direct_fact_check_evidence");
  const std::string dp = "validation_result.direct_fact_check_evidence";
  out.direct.analysis_result = require_string(direct, dp, "analysis_result");
  out.direct.relevant_evidence_summary = require_string(direct, dp, "relevant_evidence_summary");
  out.direct.relevant_text_evidence_ids = string_array(
      require_array(direct, dp, "relevant_text_evidence_list"),
      child(dp, "relevant_text_evidence_list"));
  const std::string label = require_string(vr, "validation_result", "predicted_label", false);
  try {
    out.label = veracity_from_string(label);
  } catch (const std::invalid_argument&) {
    throw SchemaViolation("validation_result.predicted_label",
                          "unknown veracity label '" + label + "'");
  }
  out.confidence =
      parse_confidence(require_field(vr, "validation_result", "final_sufficiency_confidence"),
                       "validation_result.final_sufficiency_confidence");
  return out;
}

IrMatchOutput validate_ir_match(const json& j) {
  IrMatchOutput out;
  const std::string rel = require_string(j, "", "relationship", false);
  try {
    out.relationship = relationship_from_string(rel);
  } catch (const std::invalid_argument&) {
    throw SchemaViolation("relationship", "unknown relationship '" + rel + "'");
  }
  out.relationship_reasoning = require_string(j, "", "relationship_reasoning");
  if (out.relationship == ImageRelationship::NoClose) {
    if (!field_is_blank(j, "tampering_probability"))
      throw SchemaViolation("tampering_probability",
                            "must be empty when there is no close relationship");
    if (!field_is_blank(j, "tampering_reasoning"))
      throw SchemaViolation("tampering_reasoning",
                            "must be empty when there is no close relationship");
  } else {
    out.tampering_probability =
        parse_percent(require_field(j, "", "tampering_probability"), "tampering_probability");
    out.tampering_reasoning = require_string(j, "", "tampering_reasoning", false);
  }
  out.confidence = parse_confidence(require_field(j, "", "confidence"), "confidence");
  return out;
}

MiscaptionAssessment validate_ir_miscaption(const json& j) {
  MiscaptionAssessment out;
  out.claim_understanding = require_string(j, "", "my_understanding_of_claim");
  out.rate = parse_percent(require_field(j, "", "Miscaption Rate"), "Miscaption Rate");
  out.reasoning = require_string(j, "", "Reasoning", false);
  return out;
}

EgOutput validate_eg(const json& j) {
  EgOutput out;
  out.claim_understanding = require_string(j, "", "my_understanding_of_claim");
  const json& vr = require_object(j, "", "validation_result");
  const std::string two =
      require_string(vr, "validation_result", "2-class_authenticity_label", false);
  const std::string three =
      require_string(vr, "validation_result", "3-class_authenticity_label", false);
  try {
    out.binary_label = binary_from_two_class(two);
  } catch (const std::invalid_argument&) {
    throw SchemaViolation("validation_result.2-class_authenticity_label",
                          "unknown 2-class label '" + two + "'");
  }
  try {
    out.label = veracity_from_string(three);
  } catch (const std::invalid_argument&) {
    throw SchemaViolation("validation_result.3-class_authenticity_label",
                          "unknown 3-class label '" + three + "'");
  }
  if (out.binary_label != collapse_to_binary(out.label))
    throw SchemaViolation("validation_result.2-class_authenticity_label",
                          "inconsistent with the 3-class label under the collapse rule");
  out.reasoning_logic = require_string(vr, "validation_result", "reasoning_logic");
  out.key_points = string_array(require_array(vr, "validation_result", "key_points"),
                                "validation_result.key_points");
  out.confidence = parse_confidence(require_field(j, "", "confidence_level"), "confidence_level");
  return out;
}

PostExtraction validate_corpus_post(const json& j) {
  PostExtraction out;
  out.post_text = require_string(j, "", "post_text");
  out.post_media = string_array(require_array(j, "", "post_media"), "post_media");
  return out;
}

RationaleExtraction validate_corpus_rationale(const json& j) {
  RationaleExtraction out;
  out.reasoning_logic = require_string(j, "", "reasoning_logic");
  out.key_points = string_array(require_array(j, "", "key_points"), "key_points");
  return out;
}

EvidenceExtraction validate_corpus_evidence(const json& j) {
  EvidenceExtraction out;
  const json& arr = require_array(j, "", "evidence");
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string p = elem("evidence", i);
    EvidenceExtraction::Entry entry;
    entry.description = require_string(arr[i], p, "description", false);
    entry.links = string_array(require_array(arr[i], p, "links"), child(p, "links"));
    out.evidence.push_back(std::move(entry));
  }
  return out;
}

NecessityCheck validate_qc_necessity(const json& j) {
  NecessityCheck out;
  const std::string v = util::to_lower(util::trim(require_string(j, "", "image_required", false)));
  if (v == "yes" || v == "no")
    out.image_required = v;
  else if (v == "unsure" || v == "uncertain")
    out.image_required = "unsure";
  else
    throw SchemaViolation("image_required", "expected yes, no or unsure, got '" + v + "'");
  out.reason = require_string(j, "", "reason");
  return out;
}

WatermarkCheck validate_qc_watermark(const json& j) {
  WatermarkCheck out;
  const json& w = require_field(j, "", "watermarked");
  if (w.is_boolean()) {
    out.watermarked = w.get<bool>();
  } else if (w.is_string()) {
    const std::string s = util::to_lower(util::trim(w.get<std::string>()));
    if (s == "true" || s == "yes")
      out.watermarked = true;
    else if (s == "false" || s == "no")
      out.watermarked = false;
    else
      throw SchemaViolation("watermarked", "expected a boolean, got '" + s + "'");
  } else {
    throw SchemaViolation("watermarked", "expected a boolean");
  }
  out.matched_keywords =
      string_array(require_array(j, "", "matched_keywords"), "matched_keywords");
  out.reason = require_string(j, "", "reason");
  return out;
}

std::string number_string(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  return json(v).dump();
}

}  // namespace

AgentOutput validate_agent_output(const std::string& raw, const std::string& id) {
  const json j = parse_body(raw);
  if (id == schema_id::kPlan) return validate_sp(j);
  if (id == schema_id::kQuery) return validate_tr_query(j);
  if (id == schema_id::kSummarize) return validate_tr_summarize(j);
  if (id == schema_id::kReliability) return validate_tr_reliability(j);
  if (id == schema_id::kReasoning) return validate_r(j);
  if (id == schema_id::kIrMatch) return validate_ir_match(j);
  if (id == schema_id::kIrMiscaption) return validate_ir_miscaption(j);
  if (id == schema_id::kExplanation) return validate_eg(j);
  if (id == schema_id::kCorpusPost) return validate_corpus_post(j);
  if (id == schema_id::kCorpusRationale) return validate_corpus_rationale(j);
  if (id == schema_id::kCorpusEvidence) return validate_corpus_evidence(j);
  if (id == schema_id::kQcNecessity) return validate_qc_necessity(j);
  if (id == schema_id::kQcWatermark) return validate_qc_watermark(j);
  throw std::invalid_argument("unknown schema id: '" + id + "'");
}

std::vector<std::string> extract_evidence_ids(std::string_view text) {
  static const std::regex pattern(R"((\d+)-(\d+))");
  std::vector<std::string> out;
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pattern);
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const size_t begin = static_cast<size_t>(m.position());
    const size_t end = begin + static_cast<size_t>(m.length());
    // Reject pieces of longer tokens such as dates ("2023-01-15").
    const auto joins = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; };
    if (begin > 0 && joins(s[begin - 1])) continue;
    if (end < s.size() && joins(s[end])) continue;
    const std::string id = m.str();
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

nlohmann::json to_schema_json(const Plan& p) {
  json steps = json::array();
  for (const auto& s : p.reasoning_steps)
    steps.push_back({{"step", s.step}, {"method", s.method}, {"details", s.details}});
  json validation = json::array();
  for (const auto& v : p.validation_list)
    validation.push_back({{"sentence", v.sentence}, {"explanation", v.explanation}});
  json search = json::array();
  for (const auto& s : p.search_list)
    search.push_back({{"information_needed", s.information_needed}});
  return {{"reasoning_steps", steps},
          {"validation_list", validation},
          {"search_list", search}};
}

nlohmann::json to_schema_json(const QueryList& q) { return {{"queries", q.queries}}; }

nlohmann::json to_schema_json(const SummaryList& s) {
  json arr = json::array();
  for (const auto& e : s.summaries)
    arr.push_back({{"source_url", e.source_url}, {"summary", e.summary}});
  return {{"summaries", arr}};
}

nlohmann::json to_schema_json(const ReliabilityAssessment& r) {
  return {{"source_identification", r.source_identification},
          {"type", to_string(r.type)},
          {"reasoning", r.reasoning},
          {"fact_checker_usage", r.fact_checker_usage}};
}

nlohmann::json to_schema_json(const ReasoningOutput& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"step_name", s.step_name},
                     {"description", s.description},
                     {"analysis_result", s.analysis_result},
                     {"relevant_evidence_summary", s.relevant_evidence_summary},
                     {"relevant_text_evidence_list", s.relevant_text_evidence_ids},
                     {"relevant_image_evidence_list", s.relevant_image_evidence_ids},
                     {"evidence_based_on_my_knowledge", s.knowledge_notes}});
  json direct = {{"analysis_result", r.direct.analysis_result},
                 {"relevant_evidence_summary", r.direct.relevant_evidence_summary},
                 {"relevant_text_evidence_list", r.direct.relevant_text_evidence_ids}};
  return {{"my_understanding_of_claim", r.claim_understanding},
          {"validation_result",
           {{"reasoning_steps", steps},
            {"direct_fact_check_evidence", direct},
            {"predicted_label", util::to_lower(to_string(r.label))},
            {"final_sufficiency_confidence", std::to_string(r.confidence)}}}};
}

nlohmann::json to_schema_json(const IrMatchOutput& m) {
  json j = {{"relationship", to_string(m.relationship)},
            {"relationship_reasoning", m.relationship_reasoning},
            {"confidence", std::to_string(m.confidence)}};
  if (m.relationship == ImageRelationship::NoClose) {
    j["tampering_probability"] = "";
    j["tampering_reasoning"] = "";
  } else {
    j["tampering_probability"] = number_string(m.tampering_probability.value_or(0.0));
    j["tampering_reasoning"] = m.tampering_reasoning;
  }
  return j;
}

nlohmann::json to_schema_json(const MiscaptionAssessment& m) {
  return {{"my_understanding_of_claim", m.claim_understanding},
          {"Miscaption Rate", number_string(m.rate)},
          {"Reasoning", m.reasoning}};
}

nlohmann::json to_schema_json(const EgOutput& e) {
  const char* three = e.label == VeracityLabel::True    ? "TRUE"
                      : e.label == VeracityLabel::False ? "FALSE"
                                                        : "UNPROVEN";
  return {{"my_understanding_of_claim", e.claim_understanding},
          {"validation_result",
           {{"2-class_authenticity_label",
             e.binary_label == BinaryLabel::True ? "TRUE" : "FALSE"},
            {"3-class_authenticity_label", three},
            {"reasoning_logic", e.reasoning_logic},
            {"key_points", e.key_points}}},
          {"confidence_level", std::to_string(e.confidence)}};
}

nlohmann::json to_schema_json(const PostExtraction& p) {
  return {{"post_text", p.post_text}, {"post_media", p.post_media}};
}

nlohmann::json to_schema_json(const RationaleExtraction& r) {
  return {{"reasoning_logic", r.reasoning_logic}, {"key_points", r.key_points}};
}

nlohmann::json to_schema_json(const EvidenceExtraction& e) {
  json arr = json::array();
  for (const auto& entry : e.evidence)
    arr.push_back({{"description", entry.description}, {"links", entry.links}});
  return {{"evidence", arr}};
}

nlohmann::json to_schema_json(const NecessityCheck& n) {
  return {{"image_required", n.image_required}, {"reason", n.reason}};
}

nlohmann::json to_schema_json(const WatermarkCheck& w) {
  return {{"watermarked", w.watermarked},
          {"matched_keywords", w.matched_keywords},
          {"reason", w.reason}};
}

}  // namespace agentfact
