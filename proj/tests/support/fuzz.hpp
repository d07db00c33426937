#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agentfact/providers/provider.hpp"

namespace agentfact::testsupport {

// Chat backend producing random but always schema-valid output. Randomness is
// a pure function of (seed, request), so runs are reproducible and independent
// of call order. Citations only ever use ids present in the prompt, and the
// explanation keeps its 2-class label consistent with the 3-class one, so any
// failure downstream is the pipeline's fault, not the data's.
class FuzzChatProvider : public ChatProvider {
 public:
  explicit FuzzChatProvider(std::uint64_t seed) : seed_(seed) {}
  std::string chat(const ChatRequest& request) override;

 private:
  std::uint64_t seed_;
};

// Random result lists (0..4 entries) drawn from a small domain pool, with
// publish dates straddling typical claim dates so the leakage filter gets
// exercised. Pure function of (seed, query).
class FuzzSearchProvider : public SearchProvider {
 public:
  explicit FuzzSearchProvider(std::uint64_t seed) : seed_(seed) {}
  std::vector<SearchResult> web_search(const std::string& query, int max_results) override;

 private:
  std::uint64_t seed_;
};

class FuzzReverseImageProvider : public ReverseImageProvider {
 public:
  explicit FuzzReverseImageProvider(std::uint64_t seed) : seed_(seed) {}
  std::vector<ReverseImageMatch> reverse_image_search(const std::string& image_ref) override;

 private:
  std::uint64_t seed_;
};

}  // namespace agentfact::testsupport
