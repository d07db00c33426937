#include "agentfact/providers/provider.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "agentfact/errors.hpp"
#include "agentfact/util/canonical_json.hpp"

namespace agentfact {

std::string attachment_fingerprint(const std::string& ref) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(ref, ec)) return ref;
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw ImageDecodeError("cannot read attachment: " + ref);
  std::ostringstream buf;
  buf << in.rdbuf();
  return "sha256:" + util::sha256_hex(buf.str());
}

std::string canonical_chat_request(const ChatRequest& request) {
  nlohmann::json attachments = nlohmann::json::array();
  for (const auto& ref : request.image_attachments)
    attachments.push_back(attachment_fingerprint(ref));
  return util::canonical_json({{"image_attachments", attachments},
                               {"response_schema_id", request.response_schema_id},
                               {"system_prompt", request.system_prompt},
                               {"temperature", request.temperature},
                               {"user_content", request.user_content}});
}

std::string canonical_search_request(const std::string& query) {
  return util::canonical_json({{"query", query}});
}

std::string canonical_reverse_image_request(const std::string& image_ref) {
  return util::canonical_json({{"image", attachment_fingerprint(image_ref)}});
}

double validated_deepfake_score(DeepfakeScorer& scorer, const std::string& image_ref) {
  const double score = scorer.deepfake_score(image_ref);
  if (score < 0.0 || score > 1.0)
    throw ProviderError("deepfake score out of range [0,1]: " + std::to_string(score));
  return score;
}

}  // namespace agentfact
