#pragma once

#include <memory>

#include "agentfact/providers/fixture_store.hpp"
#include "agentfact/providers/provider.hpp"

namespace agentfact {

// Strict replay: a request whose key is not in the store raises ReplayMiss.
class ReplayChatProvider : public ChatProvider {
 public:
  explicit ReplayChatProvider(std::shared_ptr<FixtureStore> store) : store_(std::move(store)) {}
  std::string chat(const ChatRequest& request) override;

 private:
  std::shared_ptr<FixtureStore> store_;
};

class ReplaySearchProvider : public SearchProvider {
 public:
  explicit ReplaySearchProvider(std::shared_ptr<FixtureStore> store) : store_(std::move(store)) {}
  std::vector<SearchResult> web_search(const std::string& query, int max_results) override;

 private:
  std::shared_ptr<FixtureStore> store_;
};

class ReplayReverseImageProvider : public ReverseImageProvider {
 public:
  explicit ReplayReverseImageProvider(std::shared_ptr<FixtureStore> store)
      : store_(std::move(store)) {}
  std::vector<ReverseImageMatch> reverse_image_search(const std::string& image_ref) override;

 private:
  std::shared_ptr<FixtureStore> store_;
};

// Pass-through wrappers that persist every exchange.
class RecordingChatProvider : public ChatProvider {
 public:
  RecordingChatProvider(std::shared_ptr<ChatProvider> inner, std::shared_ptr<FixtureStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}
  std::string chat(const ChatRequest& request) override;

 private:
  std::shared_ptr<ChatProvider> inner_;
  std::shared_ptr<FixtureStore> store_;
};

class RecordingSearchProvider : public SearchProvider {
 public:
  RecordingSearchProvider(std::shared_ptr<SearchProvider> inner,
                          std::shared_ptr<FixtureStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}
  std::vector<SearchResult> web_search(const std::string& query, int max_results) override;

 private:
  std::shared_ptr<SearchProvider> inner_;
  std::shared_ptr<FixtureStore> store_;
};

class RecordingReverseImageProvider : public ReverseImageProvider {
 public:
  RecordingReverseImageProvider(std::shared_ptr<ReverseImageProvider> inner,
                                std::shared_ptr<FixtureStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}
  std::vector<ReverseImageMatch> reverse_image_search(const std::string& image_ref) override;

 private:
  std::shared_ptr<ReverseImageProvider> inner_;
  std::shared_ptr<FixtureStore> store_;
};

}  // namespace agentfact
