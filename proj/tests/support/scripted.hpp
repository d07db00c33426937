#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/core/schema.hpp"
#include "agentfact/errors.hpp"
#include "agentfact/providers/provider.hpp"

namespace agentfact::testsupport {

// Deterministic chat backend for tests and fixture generation. Rules are
// matched in insertion order on (schema id, user-content substring); without
// a match a generic schema-valid answer is synthesized from the prompt, so
// the pipeline always moves forward.
struct ScriptRule {
  std::string schema_id;             // empty matches any schema
  std::vector<std::string> needles;  // all must appear in the user content
  std::string response;
};

class ScriptedChatProvider : public ChatProvider {
 public:
  void add(std::string schema_id, std::vector<std::string> needles, std::string response);
  void add(std::string schema_id, std::vector<std::string> needles,
           const nlohmann::json& response);
  std::string chat(const ChatRequest& request) override;

  int calls() const { return calls_; }

 private:
  std::vector<ScriptRule> rules_;
  int calls_ = 0;
};

// Generic valid response for a schema, derived from the prompt content
// (echoes queryable items, cites only ids present in the prompt).
std::string generic_response(const std::string& schema_id, const std::string& user_content);

// Ids found in the prompt, split by branch: "0-*" ids belong to the image
// branch, the rest to text evidence.
struct PromptIds {
  std::vector<std::string> text;
  std::vector<std::string> image;
};
PromptIds ids_in_prompt(const std::string& user_content);

// Numbered items under "Items to research:".
std::vector<std::string> items_in_prompt(const std::string& user_content);

// Every "url" field value appearing in the prompt's search-results JSON.
std::vector<std::string> urls_in_prompt(const std::string& user_content);

class ScriptedSearchProvider : public SearchProvider {
 public:
  void add(std::string query_contains, std::vector<SearchResult> results);
  std::vector<SearchResult> web_search(const std::string& query, int max_results) override;

 private:
  std::vector<std::pair<std::string, std::vector<SearchResult>>> rules_;
};

class ScriptedReverseImageProvider : public ReverseImageProvider {
 public:
  explicit ScriptedReverseImageProvider(std::vector<ReverseImageMatch> matches = {})
      : matches_(std::move(matches)) {}
  std::vector<ReverseImageMatch> reverse_image_search(const std::string&) override {
    return matches_;
  }

 private:
  std::vector<ReverseImageMatch> matches_;
};

// Fails the test run if anything tries to reach it (offline guarantees).
class PanicSearchProvider : public SearchProvider {
 public:
  std::vector<SearchResult> web_search(const std::string&, int) override {
    throw TransportError("network provider invoked in an offline test");
  }
};

// Minimal but well-formed PNG bytes whose header reports the given size.
std::string make_png_bytes(int width, int height);

}  // namespace agentfact::testsupport
