#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "agentfact/providers/live.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/errors.hpp"
#include "agentfact/util/dates.hpp"
#include "agentfact/util/urls.hpp"

namespace agentfact {

using nlohmann::json;

namespace {

std::string base64_encode(std::string_view bytes) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  while (i + 2 < bytes.size()) {
    const uint32_t n = (static_cast<uint8_t>(bytes[i]) << 16) |
                       (static_cast<uint8_t>(bytes[i + 1]) << 8) |
                       static_cast<uint8_t>(bytes[i + 2]);
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back(alphabet[n & 63]);
    i += 3;
  }
  if (i + 1 == bytes.size()) {
    const uint32_t n = static_cast<uint8_t>(bytes[i]) << 16;
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.append("==");
  } else if (i + 2 == bytes.size()) {
    const uint32_t n =
        (static_cast<uint8_t>(bytes[i]) << 16) | (static_cast<uint8_t>(bytes[i + 1]) << 8);
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::string image_part_url(const std::string& ref) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(ref, ec)) return ref;
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw ImageDecodeError("cannot read attachment: " + ref);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string ext = util::path_extension(ref);
  const std::string mime = ext == "png"   ? "image/png"
                           : ext == "gif" ? "image/gif"
                           : ext == "webp" ? "image/webp"
                                           : "image/jpeg";
  return "data:" + mime + ";base64," + base64_encode(buf.str());
}

json post_json(const std::string& base_url, const std::string& path,
               const httplib::Headers& headers, const json& body) {
  httplib::Client client(base_url);
  client.set_connection_timeout(20);
  client.set_read_timeout(120);
  const auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res)
    throw TransportError("request to " + base_url + path + " failed: " +
                         httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300)
    throw ProviderError("backend " + base_url + path + " returned status " +
                        std::to_string(res->status) + ": " + res->body.substr(0, 200));
  try {
    return json::parse(res->body);
  } catch (const json::exception& e) {
    throw ProviderError(std::string("backend returned unparseable JSON: ") + e.what());
  }
}

bool plausible_url(const std::string& url) { return !util::host_of(url).empty(); }

}  // namespace

std::string HttpChatProvider::chat(const ChatRequest& request) {
  if (config_.api_key.empty())
    throw ProviderUnavailable("chat backend needs an API key (CHAT_API_KEY)");
  json user_content;
  if (request.image_attachments.empty()) {
    user_content = request.user_content;
  } else {
    user_content = json::array();
    user_content.push_back({{"type", "text"}, {"text", request.user_content}});
    for (const auto& ref : request.image_attachments)
      user_content.push_back(
          {{"type", "image_url"}, {"image_url", {{"url", image_part_url(ref)}}}});
  }
  const json body = {{"model", config_.model},
                     {"temperature", request.temperature},
                     {"messages",
                      {{{"role", "system"}, {"content", request.system_prompt}},
                       {{"role", "user"}, {"content", user_content}}}}};
  const json reply = post_json(config_.base_url, "/v1/chat/completions",
                               {{"Authorization", "Bearer " + config_.api_key}}, body);
  try {
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    throw ProviderError("chat response missing choices[0].message.content");
  }
}

std::vector<SearchResult> HttpSearchProvider::web_search(const std::string& query,
                                                         int max_results) {
  if (config_.api_key.empty())
    throw ProviderUnavailable("search backend needs an API key (SEARCH_API_KEY)");
  const json reply = post_json(config_.base_url, "/search", {{"X-API-KEY", config_.api_key}},
                               json{{"q", query}});
  std::vector<SearchResult> results;
  for (const auto& item : reply.value("organic", json::array())) {
    SearchResult r;
    r.url = item.value("link", "");
    if (!plausible_url(r.url)) continue;
    r.title = item.value("title", "");
    r.snippet = item.value("snippet", "");
    if (item.contains("date") && item["date"].is_string())
      r.publish_date = util::try_parse_date(item["date"].get<std::string>());
    results.push_back(std::move(r));
    if (max_results >= 0 && results.size() == static_cast<size_t>(max_results)) break;
  }
  return results;
}

std::vector<ReverseImageMatch> HttpReverseImageProvider::reverse_image_search(
    const std::string& image_ref) {
  if (config_.api_key.empty())
    throw ProviderUnavailable("reverse image backend needs an API key (VISION_API_KEY)");
  std::error_code ec;
  if (std::filesystem::is_regular_file(image_ref, ec))
    throw ProviderUnavailable("reverse image search needs a public image URL, got a local file");
  const json reply = post_json(config_.base_url, "/lens", {{"X-API-KEY", config_.api_key}},
                               json{{"url", image_ref}});
  std::vector<ReverseImageMatch> matches;
  for (const auto& item : reply.value("organic", json::array())) {
    ReverseImageMatch m;
    m.page_url = item.value("link", "");
    if (!plausible_url(m.page_url)) continue;
    m.image_url = item.value("imageUrl", "");
    m.page_title = item.value("title", "");
    m.page_text = item.value("snippet", "");
    matches.push_back(std::move(m));
  }
  return matches;
}

}  // namespace agentfact
