#include "support/fuzz.hpp"

#include <random>

#include "agentfact/core/labels.hpp"
#include "agentfact/core/schema.hpp"
#include "agentfact/util/canonical_json.hpp"

#include "support/scripted.hpp"

namespace agentfact::testsupport {

using nlohmann::json;

namespace {

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& material) {
  // First 16 hex digits of the digest give a portable 64-bit stream id.
  const std::string digest = util::sha256_hex(std::to_string(seed) + "\n" + material);
  return std::mt19937_64(std::stoull(digest.substr(0, 16), nullptr, 16) ^ seed);
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> kWords = {
      "photo",  "event",   "report", "official", "statement", "archive",
      "record", "footage", "study",  "agency",   "festival",  "speech"};
  return kWords;
}

std::string words(std::mt19937_64& rng, int count) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (!out.empty()) out += ' ';
    out += word_pool()[rng() % word_pool().size()];
  }
  return out;
}

template <typename T>
std::vector<T> sample(std::mt19937_64& rng, const std::vector<T>& from, int count) {
  std::vector<T> out;
  for (int i = 0; i < count && !from.empty(); ++i)
    out.push_back(from[rng() % from.size()]);
  return out;
}

VeracityLabel random_label(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return VeracityLabel::True;
    case 1: return VeracityLabel::False;
    default: return VeracityLabel::Unproven;
  }
}

}  // namespace

std::string FuzzChatProvider::chat(const ChatRequest& request) {
  auto rng = rng_for(seed_, canonical_chat_request(request));
  const std::string& schema = request.response_schema_id;

  if (schema == schema_id::kPlan) {
    Plan plan;
    const int steps = pick(rng, 1, 3);
    for (int i = 0; i < steps; ++i)
      plan.reasoning_steps.push_back({words(rng, 3), "web search", words(rng, 4)});
    const int validations = pick(rng, 1, 3);
    for (int i = 0; i < validations; ++i)
      plan.validation_list.push_back(
          {"validate " + words(rng, 3) + " #" + std::to_string(i), words(rng, 3)});
    const int searches = pick(rng, 0, 3);
    for (int i = 0; i < searches; ++i)
      plan.search_list.push_back({"find " + words(rng, 3) + " #" + std::to_string(i)});
    return to_schema_json(plan).dump();
  }

  if (schema == schema_id::kQuery) {
    const auto items = items_in_prompt(request.user_content);
    QueryList queries;
    for (const auto& item : items)
      if (rng() % 4 != 0) queries.queries.push_back(item + " " + words(rng, 1));
    return to_schema_json(queries).dump();
  }

  if (schema == schema_id::kSummarize) {
    const auto urls = urls_in_prompt(request.user_content);
    SummaryList summaries;
    for (const auto& url : urls)
      if (rng() % 3 != 0) summaries.summaries.push_back({url, words(rng, 6)});
    return to_schema_json(summaries).dump();
  }

  if (schema == schema_id::kReliability) {
    ReliabilityAssessment assessment;
    assessment.source_identification = words(rng, 2);
    switch (rng() % 5) {
      case 0: assessment.type = SourceReliability::Reliable; break;
      case 1: assessment.type = SourceReliability::Unreliable; break;
      case 2: assessment.type = SourceReliability::Satire; break;
      case 3: assessment.type = SourceReliability::Unsure; break;
      default: assessment.type = SourceReliability::Factcheck; break;
    }
    assessment.reasoning = words(rng, 5);
    assessment.fact_checker_usage = words(rng, 3);
    return to_schema_json(assessment).dump();
  }

  if (schema == schema_id::kReasoning) {
    const PromptIds ids = ids_in_prompt(request.user_content);
    ReasoningOutput r;
    r.claim_understanding = words(rng, 5);
    const int steps = pick(rng, 1, 3);
    for (int i = 0; i < steps; ++i) {
      ReasoningStepDetail step;
      step.step_name = words(rng, 2);
      step.description = words(rng, 4);
      step.analysis_result = words(rng, 4);
      step.relevant_evidence_summary = words(rng, 4);
      step.relevant_text_evidence_ids = sample(rng, ids.text, pick(rng, 0, 2));
      step.relevant_image_evidence_ids = sample(rng, ids.image, pick(rng, 0, 1));
      if (rng() % 3 == 0) step.knowledge_notes.push_back(words(rng, 4));
      r.steps.push_back(std::move(step));
    }
    r.direct.analysis_result = words(rng, 3);
    r.direct.relevant_evidence_summary = words(rng, 3);
    r.direct.relevant_text_evidence_ids = sample(rng, ids.text, pick(rng, 0, 1));
    r.label = random_label(rng);
    r.confidence = pick(rng, 1, 5);
    return to_schema_json(r).dump();
  }

  if (schema == schema_id::kIrMatch) {
    IrMatchOutput ir;
    switch (rng() % 3) {
      case 0: ir.relationship = ImageRelationship::SameSource; break;
      case 1: ir.relationship = ImageRelationship::SameEvent; break;
      default: ir.relationship = ImageRelationship::NoClose; break;
    }
    ir.relationship_reasoning = words(rng, 5);
    if (ir.relationship != ImageRelationship::NoClose) {
      ir.tampering_probability = static_cast<double>(pick(rng, 0, 100));
      ir.tampering_reasoning = words(rng, 4);
    }
    ir.confidence = pick(rng, 1, 5);
    return to_schema_json(ir).dump();
  }

  if (schema == schema_id::kIrMiscaption) {
    MiscaptionAssessment mc;
    mc.claim_understanding = words(rng, 4);
    mc.rate = static_cast<double>(pick(rng, 0, 100));
    mc.reasoning = words(rng, 5);
    return to_schema_json(mc).dump();
  }

  if (schema == schema_id::kExplanation) {
    const PromptIds ids = ids_in_prompt(request.user_content);
    std::vector<std::string> pool = ids.text;
    pool.insert(pool.end(), ids.image.begin(), ids.image.end());
    EgOutput eg;
    eg.claim_understanding = words(rng, 5);
    eg.label = random_label(rng);
    eg.binary_label = collapse_to_binary(eg.label);
    eg.reasoning_logic = words(rng, 8);
    const int points =
        eg.label == VeracityLabel::Unproven ? pick(rng, 0, 2) : pick(rng, 1, 3);
    for (int i = 0; i < points; ++i) {
      std::string text = words(rng, 5);
      for (const auto& id : sample(rng, pool, pick(rng, 0, 2))) text += " [" + id + "]";
      eg.key_points.push_back(std::move(text));
    }
    eg.confidence = pick(rng, 1, 5);
    return to_schema_json(eg).dump();
  }

  // Corpus and QC prompts have deterministic generic answers already.
  return generic_response(schema, request.user_content);
}

std::vector<SearchResult> FuzzSearchProvider::web_search(const std::string& query,
                                                         int max_results) {
  auto rng = rng_for(seed_, "search\n" + query);
  static const std::vector<std::string> kDomains = {
      "https://news-alpha.example.com",  "https://daily-beta.example.org",
      "https://gazette-gamma.example.net", "https://tribune-delta.example.com",
      "https://www.snopes.com",           "https://journal-epsilon.example.org",
      "https://record-zeta.example.net",  "https://politifact.com"};
  const int count = pick(rng, 0, 4);
  std::vector<SearchResult> results;
  for (int i = 0; i < count; ++i) {
    SearchResult result;
    result.url = kDomains[rng() % kDomains.size()] + "/articles/" +
                 std::to_string(rng() % 100000);
    result.title = words(rng, 4);
    result.snippet = words(rng, 8);
    if (rng() % 4 != 0) {
      // Dates straddle mid-2024 claims: some admissible, some leakage.
      const int year = 2023 + static_cast<int>(rng() % 3);
      result.publish_date =
          util::Date(std::chrono::year(year),
                     std::chrono::month(static_cast<unsigned>(1 + rng() % 12)),
                     std::chrono::day(static_cast<unsigned>(1 + rng() % 28)));
    }
    results.push_back(std::move(result));
  }
  if (max_results >= 0 && results.size() > static_cast<size_t>(max_results))
    results.resize(static_cast<size_t>(max_results));
  return results;
}

std::vector<ReverseImageMatch> FuzzReverseImageProvider::reverse_image_search(
    const std::string& image_ref) {
  auto rng = rng_for(seed_, "reverse\n" + image_ref);
  const int count = pick(rng, 0, 3);
  std::vector<ReverseImageMatch> matches;
  for (int i = 0; i < count; ++i) {
    ReverseImageMatch match;
    match.image_url = "https://img-cdn.example.com/" + std::to_string(rng() % 100000) + ".jpg";
    match.page_url = "https://news-alpha.example.com/gallery/" + std::to_string(rng() % 100000);
    match.page_title = words(rng, 4);
    match.page_text = rng() % 3 == 0 ? std::string{} : words(rng, 10);
    matches.push_back(std::move(match));
  }
  return matches;
}

}  // namespace agentfact::testsupport
