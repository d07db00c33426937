#include "agentfact/corpus/builder.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "agentfact/errors.hpp"
#include "agentfact/util/image_probe.hpp"
#include "agentfact/util/strings.hpp"

namespace agentfact::corpus {

namespace {

constexpr int kMinWords = 90;
constexpr int kMaxWords = 2000;
constexpr int kMinImageSide = 200;

std::optional<util::Date> date_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return util::parse_date(j.at(key).get<std::string>());
}

}  // namespace

std::string to_string(CorpusLabel label) {
  switch (label) {
    case CorpusLabel::False_: return "False";
    case CorpusLabel::Mixture: return "Mixture";
    case CorpusLabel::Outdated: return "Outdated";
    case CorpusLabel::True_: return "True";
    case CorpusLabel::Unproven: return "Unproven";
    case CorpusLabel::Excluded: return "Excluded";
  }
  return "Excluded";
}

CorpusLabel corpus_label_from_string(std::string_view s) {
  if (s == "False") return CorpusLabel::False_;
  if (s == "Mixture") return CorpusLabel::Mixture;
  if (s == "Outdated") return CorpusLabel::Outdated;
  if (s == "True") return CorpusLabel::True_;
  if (s == "Unproven") return CorpusLabel::Unproven;
  if (s == "Excluded") return CorpusLabel::Excluded;
  throw std::invalid_argument("unknown corpus label: " + std::string(s));
}

CorpusLabel map_label(std::string_view raw) {
  static const std::map<std::string, CorpusLabel> kTable = {
      {"FALSE", CorpusLabel::False_},
      {"MISCAPTION", CorpusLabel::False_},
      {"MISCAPTIONED", CorpusLabel::False_},
      {"FAKE", CorpusLabel::False_},
      {"LEGEND", CorpusLabel::False_},
      {"SCAM", CorpusLabel::False_},
      {"MISATTRIBUTED", CorpusLabel::False_},
      {"MOSTLY FALSE", CorpusLabel::Mixture},
      {"MIXTURE", CorpusLabel::Mixture},
      {"MOSTLY TRUE", CorpusLabel::Mixture},
      {"OUTDATED", CorpusLabel::Outdated},
      {"TRUE", CorpusLabel::True_},
      {"CORRECT ATTRIBUTION", CorpusLabel::True_},
      {"LEGIT", CorpusLabel::True_},
      {"UNFOUNDED", CorpusLabel::Unproven},
      {"UNPROVEN", CorpusLabel::Unproven},
      {"RESEARCH IN PROGRESS", CorpusLabel::Unproven},
  };
  std::string key = util::collapse_whitespace(util::trim(raw));
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  const auto it = kTable.find(key);
  return it == kTable.end() ? CorpusLabel::Excluded : it->second;
}

void to_json(nlohmann::json& j, const GtEvidence& e) {
  j = nlohmann::json{{"description", e.description},
                     {"url", e.url},
                     {"modality", to_string(e.modality)}};
}

void from_json(const nlohmann::json& j, GtEvidence& e) {
  j.at("description").get_to(e.description);
  j.at("url").get_to(e.url);
  e.modality = modality_from_string(j.at("modality").get<std::string>());
}

void to_json(nlohmann::json& j, const GtKeyPoint& k) {
  j = nlohmann::json{{"text", k.text}, {"evidence_refs", k.evidence_refs}};
}

void from_json(const nlohmann::json& j, GtKeyPoint& k) {
  j.at("text").get_to(k.text);
  j.at("evidence_refs").get_to(k.evidence_refs);
}

void to_json(nlohmann::json& j, const DatasetRecord& r) {
  j = nlohmann::json{
      {"claim_id", r.claim_id},
      {"claim_text", r.claim_text},
      {"post_text", r.post_text},
      {"post_image_url", r.post_image_url ? nlohmann::json(*r.post_image_url)
                                          : nlohmann::json(nullptr)},
      {"label", to_string(r.label)},
      {"raw_label", r.raw_label},
      {"domain_category", r.domain_category},
      {"fact_check_date", r.fact_check_date
                              ? nlohmann::json(util::format_date(*r.fact_check_date))
                              : nlohmann::json(nullptr)},
      {"gt_reasoning", r.gt_reasoning},
      {"gt_key_points", r.gt_key_points},
      {"gt_evidence", r.gt_evidence},
      {"gt_evidence_count", r.gt_evidence_count}};
}

void from_json(const nlohmann::json& j, DatasetRecord& r) {
  j.at("claim_id").get_to(r.claim_id);
  j.at("claim_text").get_to(r.claim_text);
  j.at("post_text").get_to(r.post_text);
  if (j.contains("post_image_url") && !j.at("post_image_url").is_null())
    r.post_image_url = j.at("post_image_url").get<std::string>();
  else
    r.post_image_url.reset();
  r.label = corpus_label_from_string(j.at("label").get<std::string>());
  j.at("raw_label").get_to(r.raw_label);
  j.at("domain_category").get_to(r.domain_category);
  r.fact_check_date = date_from_json(j, "fact_check_date");
  j.at("gt_reasoning").get_to(r.gt_reasoning);
  j.at("gt_key_points").get_to(r.gt_key_points);
  j.at("gt_evidence").get_to(r.gt_evidence);
  j.at("gt_evidence_count").get_to(r.gt_evidence_count);
}

FilterDecision filter_article(const TaggedArticle& article,
                              const std::vector<ImageDims>& images) {
  FilterDecision decision;
  if (article.word_count < kMinWords) {
    decision.keep = false;
    decision.reason = "too_short";
    return decision;
  }
  if (article.word_count > kMaxWords) {
    decision.keep = false;
    decision.reason = "too_long";
    return decision;
  }
  for (const auto& dims : images) {
    if (dims.width < kMinImageSide || dims.height < kMinImageSide)
      decision.dropped_images.push_back(dims.url);
  }
  return decision;
}

Annotations extract_annotations(const TaggedArticle& article, const AgentRuntime& agents) {
  Annotations out;

  const auto post = agents.extract_post(article.interleaved_text);
  for (const auto& url : post.post_media)
    if (!article.has_url(url)) throw LinkNotInArticle("post_extraction", url);
  out.post_text = post.post_text;
  out.post_media = post.post_media;

  const auto rationale = agents.extract_rationale(article.interleaved_text,
                                                  article.meta.raw_label);
  out.reasoning = rationale.reasoning_logic;

  for (const auto& point_text : rationale.key_points) {
    const auto extraction =
        agents.extract_evidence_for_key_point(article.interleaved_text, point_text);
    GtKeyPoint point;
    point.text = point_text;
    for (const auto& entry : extraction.evidence) {
      std::vector<std::string> urls = entry.links;
      if (urls.empty()) urls.push_back("");  // rationale point with no citation
      for (const auto& url : urls) {
        if (!url.empty() && !article.has_url(url))
          throw LinkNotInArticle("evidence_extraction", url);
        GtEvidence item;
        item.description = entry.description;
        item.url = url;
        item.modality = (!url.empty() && classify_url(url) == UrlKind::Image)
                            ? Modality::Image
                            : Modality::Text;
        const auto found = std::find(out.evidence.begin(), out.evidence.end(), item);
        int index;
        if (found == out.evidence.end()) {
          index = static_cast<int>(out.evidence.size());
          out.evidence.push_back(std::move(item));
        } else {
          index = static_cast<int>(found - out.evidence.begin());
        }
        if (std::find(point.evidence_refs.begin(), point.evidence_refs.end(), index) ==
            point.evidence_refs.end())
          point.evidence_refs.push_back(index);
      }
    }
    out.key_points.push_back(std::move(point));
  }
  return out;
}

QcDecision qc_checks(const DatasetRecord& record, const AgentRuntime& agents,
                     const std::optional<std::string>& image_ref) {
  QcDecision decision;
  const auto necessity = agents.check_image_necessity(record.claim_text);
  if (necessity.image_required != "yes") {
    decision.keep = false;
    decision.reasons.push_back("not_multimodal");
    return decision;
  }
  if (!record.post_image_url) {
    decision.keep = false;
    decision.reasons.push_back("missing_image");
    return decision;
  }
  const std::string ref = image_ref.value_or(*record.post_image_url);
  const auto watermark = agents.check_watermark(record.claim_text, ref);
  if (watermark.watermarked) {
    decision.keep = false;
    decision.reasons.push_back("watermark");
  }
  return decision;
}

BuildOutcome build_record(const TaggedArticle& article, const AgentRuntime& agents,
                          const ImageResolver& resolve_image) {
  BuildOutcome outcome;

  const CorpusLabel label = map_label(article.meta.raw_label);
  if (label == CorpusLabel::Excluded) {
    outcome.rejections.push_back("label_excluded");
    return outcome;
  }

  std::vector<ImageDims> dims;
  std::vector<std::string> undecodable;
  for (const auto& tagged : article.urls) {
    if (tagged.kind != UrlKind::Image) continue;
    const auto path = resolve_image ? resolve_image(tagged.url) : std::nullopt;
    if (!path) continue;  // no bytes to judge, keep the tag
    try {
      const auto info = util::probe_image_file(*path);
      dims.push_back({tagged.url, static_cast<int>(info.width), static_cast<int>(info.height)});
    } catch (const ImageDecodeError&) {
      undecodable.push_back(tagged.url);
    }
  }

  auto decision = filter_article(article, dims);
  if (!decision.keep) {
    outcome.rejections.push_back(decision.reason);
    return outcome;
  }
  std::vector<std::string> to_drop = decision.dropped_images;
  for (const auto& url : undecodable)
    if (std::find(to_drop.begin(), to_drop.end(), url) == to_drop.end())
      to_drop.push_back(url);
  outcome.dropped_images = to_drop;
  const TaggedArticle trimmed = to_drop.empty() ? article : drop_images(article, to_drop);

  const Annotations notes = extract_annotations(trimmed, agents);

  DatasetRecord record;
  record.claim_id = article.meta.article_id;
  record.claim_text = article.meta.claim;
  record.post_text = notes.post_text;
  for (const auto& url : notes.post_media) {
    if (classify_url(url) == UrlKind::Image) {
      record.post_image_url = url;
      break;
    }
  }
  record.label = label;
  record.raw_label = article.meta.raw_label;
  record.domain_category = article.meta.category;
  record.fact_check_date = article.meta.date;
  record.gt_reasoning = notes.reasoning;
  record.gt_key_points = notes.key_points;
  record.gt_evidence = notes.evidence;
  record.gt_evidence_count = static_cast<int>(notes.evidence.size());

  std::optional<std::string> image_path;
  if (record.post_image_url && resolve_image) image_path = resolve_image(*record.post_image_url);
  const auto qc = qc_checks(record, agents, image_path);
  if (!qc.keep) {
    outcome.rejections = qc.reasons;
    return outcome;
  }
  outcome.record = std::move(record);
  return outcome;
}

}  // namespace agentfact::corpus
