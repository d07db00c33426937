#include "agentfact/agents/prompt_template.hpp"

#include <algorithm>
#include <stdexcept>

#include "agentfact/errors.hpp"

namespace agentfact {

std::string render_template(const std::string& skeleton,
                            const std::map<std::string, std::string>& bindings) {
  std::string out;
  out.reserve(skeleton.size());
  size_t pos = 0;
  while (pos < skeleton.size()) {
    const auto open = skeleton.find("{{", pos);
    if (open == std::string::npos) {
      out.append(skeleton, pos, std::string::npos);
      break;
    }
    out.append(skeleton, pos, open - pos);
    const auto close = skeleton.find("}}", open + 2);
    if (close == std::string::npos)
      throw TemplateError("unterminated placeholder in template at offset " +
                          std::to_string(open));
    const std::string name = skeleton.substr(open + 2, close - open - 2);
    const auto it = bindings.find(name);
    if (it == bindings.end()) throw TemplateError("unbound placeholder '" + name + "'");
    out.append(it->second);
    pos = close + 2;
  }
  return out;
}

std::vector<std::string> template_placeholders(const std::string& skeleton) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const auto open = skeleton.find("{{", pos);
    if (open == std::string::npos) break;
    const auto close = skeleton.find("}}", open + 2);
    if (close == std::string::npos) break;
    const std::string name = skeleton.substr(open + 2, close - open - 2);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    pos = close + 2;
  }
  return out;
}

const PromptLibrary& PromptLibrary::instance() {
  static const PromptLibrary library;
  return library;
}

const PromptTemplate& PromptLibrary::get(const std::string& template_id) const {
  const auto it = templates_.find(template_id);
  if (it == templates_.end())
    throw std::invalid_argument("unknown prompt template: '" + template_id + "'");
  return it->second;
}

std::vector<std::string> PromptLibrary::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, t] : templates_) out.push_back(id);
  return out;
}

}  // namespace agentfact
