#include "agentfact/agents/agents.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/errors.hpp"
#include "agentfact/util/strings.hpp"

namespace agentfact {

using nlohmann::json;

namespace {

std::string date_binding(const std::optional<util::Date>& d) {
  return d ? util::format_date(*d) : "unknown";
}

std::string evidence_binding(const std::vector<EvidenceItem>& items) {
  return json(items).dump(2);
}

std::string image_section_binding(const std::optional<ImageAnalysisResult>& analysis) {
  if (!analysis) return "No image analysis available.";
  return "Image analysis:\n" + json(*analysis).dump(2);
}

std::set<std::string> allowed_image_ids(const std::vector<EvidenceItem>& evidence,
                                        const std::optional<ImageAnalysisResult>& analysis) {
  std::set<std::string> ids;
  for (const auto& e : evidence)
    if (e.modality == Modality::Image) ids.insert(e.evidence_id);
  if (analysis)
    for (const auto& m : analysis->matches) ids.insert(m.evidence_id);
  return ids;
}

void check_ids(const std::vector<std::string>& cited, const std::set<std::string>& allowed,
               const std::string& field) {
  for (const auto& id : cited)
    if (!allowed.count(id)) throw CitationOutOfPool(field, id);
}

}  // namespace

AgentRuntime::AgentRuntime(std::shared_ptr<ChatProvider> chat, AgentConfig config)
    : chat_(std::move(chat)), config_(config) {}

AgentOutput AgentRuntime::call_validated(
    const std::string& tid, const std::map<std::string, std::string>& bindings,
    const std::vector<std::string>& attachments,
    const std::function<void(const AgentOutput&)>& extra_check) const {
  const PromptTemplate& tmpl = PromptLibrary::instance().get(tid);
  ChatRequest request;
  request.system_prompt = tmpl.system_text.find("{{") != std::string::npos
                              ? render_template(tmpl.system_text, bindings)
                              : tmpl.system_text;
  request.user_content = render_template(tmpl.user_skeleton, bindings);
  request.image_attachments = attachments;
  request.response_schema_id = tmpl.schema_id;
  request.temperature = config_.temperature;

  const std::string original_user = request.user_content;
  for (int attempt = 0;; ++attempt) {
    const std::string raw = chat_->chat(request);
    try {
      AgentOutput output = validate_agent_output(raw, tmpl.schema_id);
      if (extra_check) extra_check(output);
      return output;
    } catch (const SchemaViolation& violation) {
      if (attempt >= config_.retry_budget) throw;
      request.user_content = original_user +
                             "\n\nYour previous response was rejected: " + violation.what() +
                             "\nRespond again with corrected JSON in the required format.";
    }
  }
}

Plan AgentRuntime::plan(const MultimodalClaim& claim,
                        const std::optional<ReasoningOutput>& previous) const {
  std::map<std::string, std::string> bindings = {
      {"claim", claim.text},
      {"post_text", claim.post_text},
      {"claim_date", date_binding(claim.claim_date)},
      {"max_validation_items", std::to_string(config_.max_validation_items)},
      {"max_search_items", std::to_string(config_.max_search_items)},
  };
  if (previous) {
    bindings["previous_section"] =
        "A previous round ended with insufficient evidence. Previous accumulated reasoning:\n" +
        to_schema_json(*previous).dump(2) + "\nPlan differently to close its gaps.";
  } else {
    bindings["previous_section"] = "This is the first planning round.";
  }
  return std::get<Plan>(call_validated(template_id::kPlan, bindings, {}));
}

std::vector<std::string> AgentRuntime::generate_queries(
    const std::vector<std::string>& items, const MultimodalClaim& claim,
    const std::vector<std::string>& prior_queries) const {
  if (items.empty()) return {};
  std::string rendered_items;
  for (size_t i = 0; i < items.size(); ++i)
    rendered_items += std::to_string(i + 1) + ". " + items[i] + "\n";
  std::string rendered_prior = prior_queries.empty() ? "(none)\n" : "";
  for (const auto& q : prior_queries) rendered_prior += "- " + q + "\n";
  const auto output = std::get<QueryList>(call_validated(
      template_id::kQuery,
      {{"claim", claim.text}, {"items", rendered_items}, {"prior_queries", rendered_prior}},
      {}));

  std::vector<std::string> queries;
  const auto seen_before = [&](const std::string& q) {
    const auto eq = [&](const std::string& other) {
      return util::iequals(util::trim(other), util::trim(q));
    };
    return std::any_of(prior_queries.begin(), prior_queries.end(), eq) ||
           std::any_of(queries.begin(), queries.end(), eq);
  };
  for (const auto& q : output.queries) {
    if (queries.size() == items.size()) break;  // one query per item at most
    if (util::trim(q).empty() || seen_before(q)) continue;
    queries.push_back(q);
  }
  return queries;
}

SummaryList AgentRuntime::filter_and_summarize(const std::string& query,
                                               const MultimodalClaim& claim,
                                               const std::vector<SearchResult>& results) const {
  if (results.empty()) return {};
  std::set<std::string> allowed_urls;
  for (const auto& r : results) allowed_urls.insert(r.url);
  const auto check = [&](const AgentOutput& output) {
    const auto& summaries = std::get<SummaryList>(output).summaries;
    for (size_t i = 0; i < summaries.size(); ++i)
      if (!allowed_urls.count(summaries[i].source_url))
        throw SchemaViolation("summaries[" + std::to_string(i) + "].source_url",
                              "url not among the supplied search results: " +
                                  summaries[i].source_url);
  };
  return std::get<SummaryList>(call_validated(
      template_id::kSummarize,
      {{"query", query}, {"claim", claim.text}, {"results", json(results).dump(2)}}, {}, check));
}

ReliabilityAssessment AgentRuntime::assess_source_reliability(const std::string& url) const {
  return std::get<ReliabilityAssessment>(
      call_validated(template_id::kReliability, {{"url", url}}, {}));
}

IrMatchOutput AgentRuntime::analyze_image_relationship(const std::string& post_image,
                                                       const MultimodalClaim& claim,
                                                       const ReverseImageMatch& match) const {
  std::vector<std::string> attachments = {post_image};
  if (!match.image_url.empty()) attachments.push_back(match.image_url);
  return std::get<IrMatchOutput>(call_validated(template_id::kIrMatch,
                                                {{"claim", claim.text},
                                                 {"post_image", post_image},
                                                 {"match_image_url", match.image_url},
                                                 {"match_page_url", match.page_url},
                                                 {"match_page_title", match.page_title},
                                                 {"match_page_text", match.page_text}},
                                                attachments));
}

MiscaptionAssessment AgentRuntime::detect_miscaption(const MultimodalClaim& claim,
                                                     const std::string& post_image,
                                                     const std::string& match_context) const {
  return std::get<MiscaptionAssessment>(call_validated(
      template_id::kIrMiscaption,
      {{"claim", claim.text}, {"post_image", post_image}, {"match_context", match_context}},
      {post_image}));
}

ReasoningOutput AgentRuntime::reason(const MultimodalClaim& claim, const Plan& plan,
                                     const std::vector<EvidenceItem>& evidence,
                                     const std::optional<ImageAnalysisResult>& image_analysis,
                                     ReasoningMode mode,
                                     const std::optional<ReasoningOutput>& previous) const {
  if (mode == ReasoningMode::Temporary && evidence.empty())
    throw std::invalid_argument("temporary reasoning needs a non-empty evidence batch");

  std::set<std::string> text_ids;
  for (const auto& e : evidence)
    if (e.modality == Modality::Text) text_ids.insert(e.evidence_id);
  const std::set<std::string> image_ids = allowed_image_ids(evidence, image_analysis);

  const auto check = [&](const AgentOutput& output) {
    const auto& r = std::get<ReasoningOutput>(output);
    for (size_t i = 0; i < r.steps.size(); ++i) {
      const std::string p = "validation_result.reasoning_steps[" + std::to_string(i) + "]";
      check_ids(r.steps[i].relevant_text_evidence_ids, text_ids,
                p + ".relevant_text_evidence_list");
      check_ids(r.steps[i].relevant_image_evidence_ids, image_ids,
                p + ".relevant_image_evidence_list");
    }
    check_ids(r.direct.relevant_text_evidence_ids, text_ids,
              "validation_result.direct_fact_check_evidence.relevant_text_evidence_list");
  };

  std::map<std::string, std::string> bindings = {
      {"claim", claim.text},
      {"claim_date", date_binding(claim.claim_date)},
      {"plan", to_schema_json(plan).dump(2)},
      {"image_section", image_section_binding(image_analysis)},
      {"evidence", evidence_binding(evidence)},
  };
  if (mode == ReasoningMode::Accumulated && previous) {
    bindings["previous_section"] =
        "Your previous accumulated reasoning:\n" + to_schema_json(*previous).dump(2);
  } else {
    bindings["previous_section"] = "";
  }
  const char* tid = mode == ReasoningMode::Temporary ? template_id::kReasonTemporary
                                                     : template_id::kReasonAccumulated;
  auto result = std::get<ReasoningOutput>(call_validated(tid, bindings, {}, check));
  result.mode = mode;
  return result;
}

Explanation AgentRuntime::generate_explanation(
    const MultimodalClaim& claim, const ReasoningOutput& reasoning,
    const std::vector<EvidenceItem>& evidence,
    const std::optional<ImageAnalysisResult>& image_analysis) const {
  std::set<std::string> pool_ids;
  for (const auto& e : evidence) pool_ids.insert(e.evidence_id);
  if (image_analysis)
    for (const auto& m : image_analysis->matches) pool_ids.insert(m.evidence_id);

  const auto check = [&](const AgentOutput& output) {
    const auto& eg = std::get<EgOutput>(output);
    for (size_t i = 0; i < eg.key_points.size(); ++i)
      check_ids(extract_evidence_ids(eg.key_points[i]), pool_ids,
                "validation_result.key_points[" + std::to_string(i) + "]");
  };

  const auto eg = std::get<EgOutput>(
      call_validated(template_id::kExplanation,
                     {{"claim", claim.text},
                      {"claim_date", date_binding(claim.claim_date)},
                      {"reasoning", to_schema_json(reasoning).dump(2)},
                      {"image_section", image_section_binding(image_analysis)},
                      {"evidence", evidence_binding(evidence)}},
                     {}, check));

  Explanation out;
  out.claim_id = claim.claim_id;
  out.claim_understanding = eg.claim_understanding;
  out.binary_label = eg.binary_label;
  out.label = eg.label;
  out.reasoning_logic = eg.reasoning_logic;
  for (const auto& kp : eg.key_points)
    out.key_points.push_back({kp, extract_evidence_ids(kp)});
  out.evidence = evidence;
  out.image_analysis = image_analysis;
  out.confidence = eg.confidence;
  return out;
}

PostExtraction AgentRuntime::extract_post(const std::string& article_text) const {
  return std::get<PostExtraction>(
      call_validated(template_id::kCorpusPost, {{"article", article_text}}, {}));
}

RationaleExtraction AgentRuntime::extract_rationale(const std::string& article_text,
                                                    const std::string& raw_label) const {
  return std::get<RationaleExtraction>(call_validated(
      template_id::kCorpusRationale, {{"article", article_text}, {"raw_label", raw_label}}, {}));
}

EvidenceExtraction AgentRuntime::extract_evidence_for_key_point(
    const std::string& article_text, const std::string& key_point) const {
  return std::get<EvidenceExtraction>(call_validated(
      template_id::kCorpusEvidence, {{"article", article_text}, {"key_point", key_point}}, {}));
}

NecessityCheck AgentRuntime::check_image_necessity(const std::string& claim_text) const {
  return std::get<NecessityCheck>(
      call_validated(template_id::kQcNecessity, {{"claim", claim_text}}, {}));
}

WatermarkCheck AgentRuntime::check_watermark(const std::string& claim_text,
                                             const std::string& image_ref) const {
  return std::get<WatermarkCheck>(
      call_validated(template_id::kQcWatermark, {{"claim", claim_text}}, {image_ref}));
}

}  // namespace agentfact
