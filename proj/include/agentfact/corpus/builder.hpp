#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/agents/agents.hpp"
#include "agentfact/core/types.hpp"
#include "agentfact/corpus/reformat.hpp"

namespace agentfact::corpus {

// High-level labels after consolidation. Excluded marks articles whose raw
// label falls outside the factual-accuracy vocabulary (satire and the like);
// those never reach the dataset.
enum class CorpusLabel { False_, Mixture, Outdated, True_, Unproven, Excluded };

std::string to_string(CorpusLabel label);
CorpusLabel corpus_label_from_string(std::string_view s);

// Total over all inputs: trims, collapses inner whitespace, uppercases, then
// applies the consolidation table; anything unrecognized becomes Excluded.
CorpusLabel map_label(std::string_view raw);

struct GtEvidence {
  std::string description;
  std::string url;  // empty when the rationale cites no link
  Modality modality = Modality::Text;
  bool operator==(const GtEvidence&) const = default;
};

struct GtKeyPoint {
  std::string text;
  std::vector<int> evidence_refs;  // indices into DatasetRecord::gt_evidence
  bool operator==(const GtKeyPoint&) const = default;
};

struct DatasetRecord {
  std::string claim_id;
  std::string claim_text;
  std::string post_text;
  std::optional<std::string> post_image_url;
  CorpusLabel label = CorpusLabel::Unproven;
  std::string raw_label;
  std::string domain_category;
  std::optional<util::Date> fact_check_date;
  std::string gt_reasoning;
  std::vector<GtKeyPoint> gt_key_points;
  std::vector<GtEvidence> gt_evidence;
  int gt_evidence_count = 0;
  bool operator==(const DatasetRecord&) const = default;
};

void to_json(nlohmann::json& j, const GtEvidence& e);
void from_json(const nlohmann::json& j, GtEvidence& e);
void to_json(nlohmann::json& j, const GtKeyPoint& k);
void from_json(const nlohmann::json& j, GtKeyPoint& k);
void to_json(nlohmann::json& j, const DatasetRecord& r);
void from_json(const nlohmann::json& j, DatasetRecord& r);

struct ImageDims {
  std::string url;
  int width = 0;
  int height = 0;
};

struct FilterDecision {
  bool keep = true;
  std::string reason;  // too_short | too_long when rejected
  std::vector<std::string> dropped_images;
};

// Word-count gate (90..2000 inclusive) plus per-image size gate: any image
// with either dimension under 200 px is dropped from the article rather than
// rejecting it outright.
FilterDecision filter_article(const TaggedArticle& article,
                              const std::vector<ImageDims>& images);

struct Annotations {
  std::string post_text;
  std::vector<std::string> post_media;
  std::string reasoning;
  std::vector<GtKeyPoint> key_points;
  std::vector<GtEvidence> evidence;
};

// Three chained extraction calls: the claim-aligned post, the rationale with
// its key points, then evidence per key point. Every link any stage returns
// must appear verbatim among the article's tagged URLs or LinkNotInArticle is
// thrown. Evidence entries are deduplicated on (description, url) so a point
// shared by two key points is stored once and referenced twice.
Annotations extract_annotations(const TaggedArticle& article, const AgentRuntime& agents);

struct QcDecision {
  bool keep = true;
  std::vector<std::string> reasons;  // not_multimodal | missing_image | watermark
};

// Image-necessity check (answers other than yes reject the record) followed
// by the watermark check on the post image.
QcDecision qc_checks(const DatasetRecord& record, const AgentRuntime& agents,
                     const std::optional<std::string>& image_ref);

// Maps an article URL to a local file when the corpus directory carries the
// bytes; nullopt when only the URL is known.
using ImageResolver = std::function<std::optional<std::string>(const std::string&)>;

struct BuildOutcome {
  std::optional<DatasetRecord> record;  // set iff the article survived
  std::vector<std::string> rejections;
  std::vector<std::string> dropped_images;
};

// Full per-article pipeline: label consolidation, size filters, annotation
// extraction, record assembly, QC. Images that resolve locally but fail to
// decode are treated as undecodable and dropped like undersized ones.
BuildOutcome build_record(const TaggedArticle& article, const AgentRuntime& agents,
                          const ImageResolver& resolve_image);

}  // namespace agentfact::corpus
