#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace agentfact::util {

// Compact serialization with object keys sorted; the canonical byte form used
// for fixture keys. Two JSON texts that parse to the same value canonicalize
// to identical bytes.
std::string canonical_json(const nlohmann::json& j);
std::string canonicalize_json_text(std::string_view text);

std::string sha256_hex(std::string_view bytes);

}  // namespace agentfact::util
