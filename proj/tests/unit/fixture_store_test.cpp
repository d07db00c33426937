#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>

#include "agentfact/errors.hpp"
#include "agentfact/providers/fixture_store.hpp"
#include "agentfact/providers/provider.hpp"
#include "agentfact/providers/replay.hpp"
#include "agentfact/util/canonical_json.hpp"
#include "support/scripted.hpp"

using namespace agentfact;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("agentfact_store_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

ChatRequest sample_request() {
  ChatRequest r;
  r.system_prompt = "system";
  r.user_content = "user content";
  r.response_schema_id = "tr-query";
  return r;
}

}  // namespace

TEST_CASE("fixture keys are digests of kind and canonical request") {
  const std::string canonical = canonical_chat_request(sample_request());
  const std::string key = make_fixture_key("chat", canonical);
  CHECK(key == util::sha256_hex("chat\n" + canonical));
  CHECK(key.size() == 64);
  // Different provider kinds never collide on the same payload.
  CHECK(make_fixture_key("search", canonical) != key);
}

TEST_CASE("canonical chat requests ignore json key order but not content") {
  ChatRequest a = sample_request();
  ChatRequest b = sample_request();
  CHECK(canonical_chat_request(a) == canonical_chat_request(b));
  b.user_content = "user content!";
  CHECK(canonical_chat_request(a) != canonical_chat_request(b));
  b = sample_request();
  b.temperature = 0.5;
  CHECK(canonical_chat_request(a) != canonical_chat_request(b));
}

TEST_CASE("record then replay round trip") {
  TempDir dir;
  auto store = std::make_shared<FixtureStore>(dir.path, /*create=*/true);

  auto scripted = std::make_shared<testsupport::ScriptedChatProvider>();
  scripted->add("tr-query", {"user content"}, std::string(R"({"queries": ["q1"]})"));

  RecordingChatProvider recorder(scripted, store);
  const std::string live = recorder.chat(sample_request());
  CHECK(live == R"({"queries": ["q1"]})");
  CHECK(store->keys().size() == 1);

  ReplayChatProvider replayer(store);
  CHECK(replayer.chat(sample_request()) == live);

  ChatRequest other = sample_request();
  other.user_content = "never recorded";
  CHECK_THROWS_AS(replayer.chat(other), ReplayMiss);
}

TEST_CASE("search replay returns the full recorded list, then truncates") {
  TempDir dir;
  auto store = std::make_shared<FixtureStore>(dir.path, /*create=*/true);

  auto scripted = std::make_shared<testsupport::ScriptedSearchProvider>();
  std::vector<SearchResult> five;
  for (int i = 0; i < 5; ++i)
    five.push_back({"https://r" + std::to_string(i) + ".example.com", "t", "s", std::nullopt});
  scripted->add("query", five);

  RecordingSearchProvider recorder(scripted, store);
  // Recording captures the inner provider's full list even when the caller
  // asked for fewer.
  CHECK(recorder.web_search("query one", 2).size() == 2);

  ReplaySearchProvider replayer(store);
  CHECK(replayer.web_search("query one", 4).size() == 4);
  CHECK(replayer.web_search("query one", 10).size() == 5);
  CHECK_THROWS_AS(replayer.web_search("query two", 4), ReplayMiss);
}

TEST_CASE("reverse image replay keys on the content fingerprint") {
  TempDir dir;
  const fs::path img_a = dir.path / "a.png";
  const fs::path img_b = dir.path / "b.png";
  std::ofstream(img_a, std::ios::binary) << testsupport::make_png_bytes(300, 200);
  std::ofstream(img_b, std::ios::binary) << testsupport::make_png_bytes(300, 200);

  // Identical bytes at different paths canonicalize identically.
  CHECK(canonical_reverse_image_request(img_a.string()) ==
        canonical_reverse_image_request(img_b.string()));
  // A remote reference passes through as-is.
  CHECK(canonical_reverse_image_request("https://x.example.com/i.png") !=
        canonical_reverse_image_request(img_a.string()));

  auto store = std::make_shared<FixtureStore>(dir.path, /*create=*/true);
  auto scripted = std::make_shared<testsupport::ScriptedReverseImageProvider>(
      std::vector<ReverseImageMatch>{{"https://m.example.com/i.jpg",
                                      "https://m.example.com/page", "title", "text"}});
  RecordingReverseImageProvider recorder(scripted, store);
  CHECK(recorder.reverse_image_search(img_a.string()).size() == 1);

  ReplayReverseImageProvider replayer(store);
  const auto matches = replayer.reverse_image_search(img_b.string());  // same bytes, other path
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].page_url == "https://m.example.com/page");
}

TEST_CASE("missing store directory fails fast unless created") {
  const fs::path missing = fs::temp_directory_path() / "agentfact_store_missing_xyz";
  fs::remove_all(missing);
  CHECK_THROWS_AS(FixtureStore(missing, /*create=*/false), StoreIOError);
  FixtureStore created(missing, /*create=*/true);
  CHECK(fs::exists(missing));
  fs::remove_all(missing);
}

TEST_CASE("verify re-derives keys and spots tampering") {
  TempDir dir;
  auto store = std::make_shared<FixtureStore>(dir.path, /*create=*/true);
  store->set_recorded_at("2025-01-15T00:00:00Z");
  store->record("chat", "canonical body", "response body");
  REQUIRE(store->keys().size() == 1);
  CHECK(store->verify().empty());

  // The pinned stamp lands in the envelope.
  const fs::path envelope = dir.path / (store->keys()[0] + ".json");
  const json parsed = json::parse(std::ifstream(envelope));
  CHECK(parsed.at("recorded_at") == "2025-01-15T00:00:00Z");

  // Mutate the canonical request; the filename no longer matches its content.
  json tampered = parsed;
  tampered["request_canonical"] = "something else";
  std::ofstream(envelope, std::ios::binary) << tampered.dump(2);
  FixtureStore reopened(dir.path);
  const auto problems = reopened.verify();
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find(store->keys()[0]) != std::string::npos);
}
