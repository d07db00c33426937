#pragma once

#include <cstdint>
#include <vector>

#include "agentfact/corpus/builder.hpp"

namespace agentfact::corpus {

struct DatasetSplit {
  std::vector<DatasetRecord> dev;
  std::vector<DatasetRecord> test;
  std::vector<DatasetRecord> challenge;
};

// Mixture and Outdated records form the challenge set. The remainder is
// shuffled with the seeded generator and cut at dev = round(n / (1 + ratio)),
// so the default ratio 4.29 turns 1771 records into 335 dev / 1436 test.
DatasetSplit split_dataset(const std::vector<DatasetRecord>& records, std::uint64_t seed,
                           double dev_to_test_ratio = 4.29);

}  // namespace agentfact::corpus
