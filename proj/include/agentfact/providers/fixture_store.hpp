#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace agentfact {

// Digest naming one recorded provider exchange.
std::string make_fixture_key(std::string_view provider_kind, std::string_view canonical_request);

// One JSON envelope per exchange, named "<key>.json". The envelope carries
// recorded_at for bookkeeping; replay consumers only ever read the response,
// so replays stay byte-stable regardless of when fixtures were recorded.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir, bool create = false);

  std::optional<std::string> lookup(const std::string& key) const;
  void record(const std::string& provider_kind, const std::string& canonical_request,
              const std::string& response);

  // Pins the recorded_at stamp, for reproducible fixture regeneration.
  void set_recorded_at(std::string iso8601);

  std::vector<std::string> keys() const;
  // Re-derives every envelope's key from its contents; returns one line per
  // problem found.
  std::vector<std::string> verify() const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  std::optional<std::string> recorded_at_override_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::string> cache_;
};

}  // namespace agentfact
