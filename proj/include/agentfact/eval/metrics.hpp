#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/core/labels.hpp"

namespace agentfact::eval {

struct PredictionRecord {
  std::string claim_id;
  VeracityLabel gold = VeracityLabel::Unproven;
  VeracityLabel predicted = VeracityLabel::Unproven;
  int confidence = 3;
  std::optional<int> gt_evidence_count;
  bool operator==(const PredictionRecord&) const = default;
};

void to_json(nlohmann::json& j, const PredictionRecord& r);
void from_json(const nlohmann::json& j, PredictionRecord& r);

enum class Averaging { Weighted, Macro };
enum class ClassSetting { Three, Binary };

struct ClassMetrics {
  std::string class_name;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int support = 0;
  bool operator==(const ClassMetrics&) const = default;
};

struct MetricsReport {
  double accuracy = 0.0;
  double precision = 0.0;  // averaged per the requested scheme
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<ClassMetrics> per_class;  // fixed vocabulary order
};

// Confusion-matrix metrics over the fixed class vocabulary of the setting
// (three-class True/False/Unproven or the binary collapse). Weighted averages
// weight by gold support; macro averages uniformly over the whole vocabulary,
// so a class nobody predicted still pulls the macro down.
MetricsReport classification_metrics(const std::vector<PredictionRecord>& records,
                                     Averaging averaging, ClassSetting setting);

// Bucket edges by ground-truth evidence count; counts of three or fewer land
// in the first bucket, nine or more in the last.
std::string bucket_name(int gt_evidence_count);

struct BucketMetrics {
  std::string bucket;
  int count = 0;
  double macro_f1_three = 0.0;
  double macro_f1_binary = 0.0;
};

struct BucketReport {
  std::vector<BucketMetrics> buckets;  // always the four buckets, in order
  int missing_count = 0;               // records lacking gt_evidence_count
};

BucketReport difficulty_buckets(const std::vector<PredictionRecord>& records);

}  // namespace agentfact::eval
