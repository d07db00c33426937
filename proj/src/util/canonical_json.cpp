#include "agentfact/util/canonical_json.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace agentfact::util {

namespace {

nlohmann::json sort_keys(const nlohmann::json& j) {
  if (j.is_object()) {
    // nlohmann::json objects already iterate in sorted key order.
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : j.items()) out[k] = sort_keys(v);
    return out;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : j) out.push_back(sort_keys(v));
    return out;
  }
  return j;
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
  return sort_keys(j).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string canonicalize_json_text(std::string_view text) {
  return canonical_json(nlohmann::json::parse(text));
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace agentfact::util
