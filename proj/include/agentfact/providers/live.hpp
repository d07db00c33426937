#pragma once

#include <string>
#include <vector>

#include "agentfact/providers/provider.hpp"

namespace agentfact {

struct LiveChatConfig {
  std::string base_url = "https://api.openai.com";
  std::string model = "gpt-4o";
  std::string api_key;  // CHAT_API_KEY
};

// OpenAI-compatible chat completions backend. Local image attachments are
// inlined as data URLs.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(LiveChatConfig config) : config_(std::move(config)) {}
  std::string chat(const ChatRequest& request) override;

 private:
  LiveChatConfig config_;
};

struct LiveSearchConfig {
  std::string base_url = "https://google.serper.dev";
  std::string api_key;  // SEARCH_API_KEY
};

// Serper-compatible JSON search API.
class HttpSearchProvider : public SearchProvider {
 public:
  explicit HttpSearchProvider(LiveSearchConfig config) : config_(std::move(config)) {}
  std::vector<SearchResult> web_search(const std::string& query, int max_results) override;

 private:
  LiveSearchConfig config_;
};

struct LiveReverseImageConfig {
  std::string base_url = "https://google.serper.dev";
  std::string api_key;  // VISION_API_KEY
};

// Serper lens-compatible reverse image lookup; needs a public image URL.
class HttpReverseImageProvider : public ReverseImageProvider {
 public:
  explicit HttpReverseImageProvider(LiveReverseImageConfig config)
      : config_(std::move(config)) {}
  std::vector<ReverseImageMatch> reverse_image_search(const std::string& image_ref) override;

 private:
  LiveReverseImageConfig config_;
};

}  // namespace agentfact
