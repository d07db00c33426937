#include "support/oracles.hpp"

#include <cstddef>

namespace agentfact::testsupport {

OracleScores oracle_scores(const std::vector<std::string>& gold,
                           const std::vector<std::string>& predicted,
                           const std::vector<std::string>& vocabulary) {
  OracleScores scores;
  const std::size_t n = gold.size();
  if (n == 0 || predicted.size() != n) return scores;

  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (gold[i] == predicted[i]) ++hits;
  scores.accuracy = static_cast<double>(hits) / static_cast<double>(n);

  double support_total = 0.0;
  for (const auto& cls : vocabulary) {
    double tp = 0, fp = 0, fn = 0, support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool is_gold = gold[i] == cls;
      const bool is_pred = predicted[i] == cls;
      if (is_gold) support += 1;
      if (is_gold && is_pred) tp += 1;
      if (!is_gold && is_pred) fp += 1;
      if (is_gold && !is_pred) fn += 1;
    }
    const double precision = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
    const double recall = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
    const double f1 =
        (precision + recall) > 0 ? 2 * precision * recall / (precision + recall) : 0.0;

    scores.weighted_precision += support * precision;
    scores.weighted_recall += support * recall;
    scores.weighted_f1 += support * f1;
    support_total += support;

    scores.macro_precision += precision;
    scores.macro_recall += recall;
    scores.macro_f1 += f1;
  }
  if (support_total > 0) {
    scores.weighted_precision /= support_total;
    scores.weighted_recall /= support_total;
    scores.weighted_f1 /= support_total;
  }
  if (!vocabulary.empty()) {
    scores.macro_precision /= static_cast<double>(vocabulary.size());
    scores.macro_recall /= static_cast<double>(vocabulary.size());
    scores.macro_f1 /= static_cast<double>(vocabulary.size());
  }
  return scores;
}

}  // namespace agentfact::testsupport
