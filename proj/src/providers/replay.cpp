#include "agentfact/providers/replay.hpp"

#include <nlohmann/json.hpp>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/errors.hpp"

namespace agentfact {

using nlohmann::json;

namespace {

constexpr const char* kChat = "chat";
constexpr const char* kSearch = "search";
constexpr const char* kReverseImage = "reverse_image";

std::string replay_lookup(const FixtureStore& store, const char* kind,
                          const std::string& canonical) {
  const std::string key = make_fixture_key(kind, canonical);
  if (auto response = store.lookup(key)) return *response;
  throw ReplayMiss(kind, key);
}

std::vector<SearchResult> parse_search_response(const std::string& body) {
  try {
    return json::parse(body).get<std::vector<SearchResult>>();
  } catch (const json::exception& e) {
    throw StoreIOError(std::string("recorded search response unreadable: ") + e.what());
  }
}

std::vector<ReverseImageMatch> parse_reverse_image_response(const std::string& body) {
  try {
    return json::parse(body).get<std::vector<ReverseImageMatch>>();
  } catch (const json::exception& e) {
    throw StoreIOError(std::string("recorded reverse image response unreadable: ") + e.what());
  }
}

void truncate_results(std::vector<SearchResult>& results, int max_results) {
  if (max_results >= 0 && results.size() > static_cast<size_t>(max_results))
    results.resize(static_cast<size_t>(max_results));
}

}  // namespace

std::string ReplayChatProvider::chat(const ChatRequest& request) {
  return replay_lookup(*store_, kChat, canonical_chat_request(request));
}

std::vector<SearchResult> ReplaySearchProvider::web_search(const std::string& query,
                                                           int max_results) {
  auto results =
      parse_search_response(replay_lookup(*store_, kSearch, canonical_search_request(query)));
  truncate_results(results, max_results);
  return results;
}

std::vector<ReverseImageMatch> ReplayReverseImageProvider::reverse_image_search(
    const std::string& image_ref) {
  return parse_reverse_image_response(
      replay_lookup(*store_, kReverseImage, canonical_reverse_image_request(image_ref)));
}

std::string RecordingChatProvider::chat(const ChatRequest& request) {
  const std::string response = inner_->chat(request);
  store_->record(kChat, canonical_chat_request(request), response);
  return response;
}

std::vector<SearchResult> RecordingSearchProvider::web_search(const std::string& query,
                                                              int max_results) {
  auto results = inner_->web_search(query, max_results);
  store_->record(kSearch, canonical_search_request(query), json(results).dump());
  truncate_results(results, max_results);
  return results;
}

std::vector<ReverseImageMatch> RecordingReverseImageProvider::reverse_image_search(
    const std::string& image_ref) {
  auto matches = inner_->reverse_image_search(image_ref);
  store_->record(kReverseImage, canonical_reverse_image_request(image_ref), json(matches).dump());
  return matches;
}

}  // namespace agentfact
