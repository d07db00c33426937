#include "agentfact/corpus/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace agentfact::corpus {

DatasetSplit split_dataset(const std::vector<DatasetRecord>& records, std::uint64_t seed,
                           double dev_to_test_ratio) {
  if (!(dev_to_test_ratio > 0.0))
    throw std::invalid_argument("dev_to_test_ratio must be positive");

  DatasetSplit split;
  std::vector<DatasetRecord> main;
  for (const auto& record : records) {
    if (record.label == CorpusLabel::Mixture || record.label == CorpusLabel::Outdated)
      split.challenge.push_back(record);
    else
      main.push_back(record);
  }

  // std::shuffle's result is implementation-defined, so use an explicit
  // Fisher-Yates pass to keep splits identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = main.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(main[i - 1], main[j]);
  }

  const auto dev_size = static_cast<std::size_t>(
      std::llround(static_cast<double>(main.size()) / (1.0 + dev_to_test_ratio)));
  split.dev.assign(main.begin(), main.begin() + static_cast<std::ptrdiff_t>(dev_size));
  split.test.assign(main.begin() + static_cast<std::ptrdiff_t>(dev_size), main.end());
  return split;
}

}  // namespace agentfact::corpus
