#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agentfact/core/types.hpp"

namespace agentfact {

struct ChatRequest {
  std::string system_prompt;
  std::string user_content;
  std::vector<std::string> image_attachments;  // local paths or URLs
  std::string response_schema_id;
  double temperature = 0.0;
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string chat(const ChatRequest& request) = 0;
};

class SearchProvider {
 public:
  virtual ~SearchProvider() = default;
  virtual std::vector<SearchResult> web_search(const std::string& query, int max_results) = 0;
};

class ReverseImageProvider {
 public:
  virtual ~ReverseImageProvider() = default;
  virtual std::vector<ReverseImageMatch> reverse_image_search(const std::string& image_ref) = 0;
};

class DeepfakeScorer {
 public:
  virtual ~DeepfakeScorer() = default;
  // Probability in [0,1].
  virtual double deepfake_score(const std::string& image_ref) = 0;
};

struct ProviderSet {
  std::shared_ptr<ChatProvider> chat;
  std::shared_ptr<SearchProvider> search;
  std::shared_ptr<ReverseImageProvider> reverse_image;
  std::shared_ptr<DeepfakeScorer> deepfake;
};

// Canonical request byte forms; fixture keys are digests over these, so two
// requests that canonicalize identically share one fixture.
std::string canonical_chat_request(const ChatRequest& request);
std::string canonical_search_request(const std::string& query);
std::string canonical_reverse_image_request(const std::string& image_ref);

// Local files are fingerprinted by content digest so keys survive renames and
// machine moves; non-file references pass through verbatim.
std::string attachment_fingerprint(const std::string& ref);

// Fixed score for offline runs; the detector backend is out of scope.
class ConstantDeepfakeScorer : public DeepfakeScorer {
 public:
  explicit ConstantDeepfakeScorer(double score) : score_(score) {}
  double deepfake_score(const std::string&) override { return score_; }

 private:
  double score_;
};

// Rejects out-of-range backend scores as ProviderError.
double validated_deepfake_score(DeepfakeScorer& scorer, const std::string& image_ref);

}  // namespace agentfact
