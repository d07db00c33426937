#include "agentfact/eval/metrics.hpp"

#include <array>
#include <map>

#include "agentfact/errors.hpp"

namespace agentfact::eval {

namespace {

struct Tally {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  int support = 0;
};

ClassMetrics metrics_from_tally(const std::string& name, const Tally& t) {
  ClassMetrics m;
  m.class_name = name;
  m.support = t.support;
  const int pred = t.tp + t.fp;
  const int gold = t.tp + t.fn;
  m.precision = pred > 0 ? static_cast<double>(t.tp) / pred : 0.0;
  m.recall = gold > 0 ? static_cast<double>(t.tp) / gold : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

}  // namespace

void to_json(nlohmann::json& j, const PredictionRecord& r) {
  j = nlohmann::json{{"claim_id", r.claim_id},
                     {"gold", to_string(r.gold)},
                     {"predicted", to_string(r.predicted)},
                     {"confidence", r.confidence}};
  j["gt_evidence_count"] =
      r.gt_evidence_count ? nlohmann::json(*r.gt_evidence_count) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, PredictionRecord& r) {
  j.at("claim_id").get_to(r.claim_id);
  r.gold = veracity_from_string(j.at("gold").get<std::string>());
  r.predicted = veracity_from_string(j.at("predicted").get<std::string>());
  if (j.contains("confidence") && !j.at("confidence").is_null())
    j.at("confidence").get_to(r.confidence);
  if (j.contains("gt_evidence_count") && !j.at("gt_evidence_count").is_null())
    r.gt_evidence_count = j.at("gt_evidence_count").get<int>();
  else
    r.gt_evidence_count.reset();
}

MetricsReport classification_metrics(const std::vector<PredictionRecord>& records,
                                     Averaging averaging, ClassSetting setting) {
  if (records.empty()) throw EmptyInput("classification_metrics needs at least one record");

  std::vector<std::string> vocabulary;
  if (setting == ClassSetting::Three)
    vocabulary = {to_string(VeracityLabel::True), to_string(VeracityLabel::False),
                  to_string(VeracityLabel::Unproven)};
  else
    vocabulary = {to_string(BinaryLabel::True), to_string(BinaryLabel::NotTrue)};

  std::map<std::string, Tally> tallies;
  for (const auto& name : vocabulary) tallies[name];

  int correct = 0;
  for (const auto& record : records) {
    std::string gold, pred;
    if (setting == ClassSetting::Three) {
      gold = to_string(record.gold);
      pred = to_string(record.predicted);
    } else {
      gold = to_string(collapse_to_binary(record.gold));
      pred = to_string(collapse_to_binary(record.predicted));
    }
    if (gold == pred) {
      ++correct;
      ++tallies[gold].tp;
    } else {
      ++tallies[gold].fn;
      ++tallies[pred].fp;
    }
    ++tallies[gold].support;
  }

  MetricsReport report;
  report.accuracy = static_cast<double>(correct) / static_cast<double>(records.size());

  double weight_sum = 0.0;
  for (const auto& name : vocabulary) {
    auto m = metrics_from_tally(name, tallies[name]);
    const double weight =
        averaging == Averaging::Weighted ? static_cast<double>(m.support) : 1.0;
    report.precision += weight * m.precision;
    report.recall += weight * m.recall;
    report.f1 += weight * m.f1;
    weight_sum += weight;
    report.per_class.push_back(std::move(m));
  }
  if (weight_sum > 0.0) {
    report.precision /= weight_sum;
    report.recall /= weight_sum;
    report.f1 /= weight_sum;
  }
  return report;
}

std::string bucket_name(int gt_evidence_count) {
  if (gt_evidence_count <= 3) return "1-3";
  if (gt_evidence_count <= 6) return "4-6";
  if (gt_evidence_count <= 8) return "7-8";
  return "9+";
}

BucketReport difficulty_buckets(const std::vector<PredictionRecord>& records) {
  static const std::array<const char*, 4> kBuckets = {"1-3", "4-6", "7-8", "9+"};
  std::map<std::string, std::vector<PredictionRecord>> grouped;
  BucketReport report;
  for (const auto& record : records) {
    if (!record.gt_evidence_count) {
      ++report.missing_count;
      continue;
    }
    grouped[bucket_name(*record.gt_evidence_count)].push_back(record);
  }
  for (const auto* name : kBuckets) {
    BucketMetrics bucket;
    bucket.bucket = name;
    const auto it = grouped.find(name);
    if (it != grouped.end() && !it->second.empty()) {
      bucket.count = static_cast<int>(it->second.size());
      bucket.macro_f1_three =
          classification_metrics(it->second, Averaging::Macro, ClassSetting::Three).f1;
      bucket.macro_f1_binary =
          classification_metrics(it->second, Averaging::Macro, ClassSetting::Binary).f1;
    }
    report.buckets.push_back(std::move(bucket));
  }
  return report;
}

}  // namespace agentfact::eval
