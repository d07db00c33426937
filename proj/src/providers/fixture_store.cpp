#include "agentfact/providers/fixture_store.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "agentfact/errors.hpp"
#include "agentfact/util/canonical_json.hpp"

namespace agentfact {

using nlohmann::json;

std::string make_fixture_key(std::string_view provider_kind, std::string_view canonical_request) {
  std::string material;
  material.reserve(provider_kind.size() + canonical_request.size() + 1);
  material.append(provider_kind);
  material.push_back('\n');
  material.append(canonical_request);
  return util::sha256_hex(material);
}

namespace {
std::string now_utc_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}
}  // namespace

FixtureStore::FixtureStore(std::filesystem::path dir, bool create) : dir_(std::move(dir)) {
  std::error_code ec;
  if (create) std::filesystem::create_directories(dir_, ec);
  if (!std::filesystem::is_directory(dir_))
    throw StoreIOError("fixture directory does not exist: " + dir_.string());
}

std::filesystem::path FixtureStore::path_for(const std::string& key) const {
  return dir_ / (key + ".json");
}

std::optional<std::string> FixtureStore::lookup(const std::string& key) const {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json envelope;
  try {
    in >> envelope;
  } catch (const json::exception& e) {
    throw StoreIOError("corrupt fixture envelope " + path_for(key).string() + ": " + e.what());
  }
  if (!envelope.contains("response") || !envelope["response"].is_string())
    throw StoreIOError("fixture envelope missing response: " + path_for(key).string());
  std::string response = envelope["response"].get<std::string>();
  std::lock_guard lock(mutex_);
  cache_[key] = response;
  return response;
}

void FixtureStore::record(const std::string& provider_kind,
                          const std::string& canonical_request, const std::string& response) {
  const std::string key = make_fixture_key(provider_kind, canonical_request);
  const json envelope = {{"key", key},
                         {"provider", provider_kind},
                         {"request_canonical", canonical_request},
                         {"response", response},
                         {"recorded_at", recorded_at_override_.value_or(now_utc_iso8601())}};
  std::ofstream out(path_for(key));
  if (!out) throw StoreIOError("cannot write fixture: " + path_for(key).string());
  out << envelope.dump(2) << '\n';
  if (!out) throw StoreIOError("short write on fixture: " + path_for(key).string());
  std::lock_guard lock(mutex_);
  cache_[key] = response;
}

void FixtureStore::set_recorded_at(std::string iso8601) {
  recorded_at_override_ = std::move(iso8601);
}

std::vector<std::string> FixtureStore::keys() const {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> FixtureStore::verify() const {
  std::vector<std::string> problems;
  for (const auto& key : keys()) {
    const auto path = path_for(key);
    json envelope;
    try {
      std::ifstream in(path);
      in >> envelope;
    } catch (const json::exception& e) {
      problems.push_back(key + ": unparseable envelope (" + e.what() + ")");
      continue;
    }
    for (const char* field : {"key", "provider", "request_canonical", "response"}) {
      if (!envelope.contains(field)) {
        problems.push_back(key + ": missing field '" + field + "'");
        envelope = nullptr;
        break;
      }
    }
    if (envelope.is_null()) continue;
    const std::string derived = make_fixture_key(envelope["provider"].get<std::string>(),
                                                 envelope["request_canonical"].get<std::string>());
    if (derived != key)
      problems.push_back(key + ": content digest mismatch (derived " + derived + ")");
    else if (envelope["key"].get<std::string>() != key)
      problems.push_back(key + ": embedded key disagrees with filename");
  }
  return problems;
}

}  // namespace agentfact
