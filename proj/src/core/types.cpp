#include "agentfact/core/types.hpp"

#include <algorithm>
#include <stdexcept>

#include "agentfact/util/strings.hpp"

namespace agentfact {

std::string to_string(Modality m) { return m == Modality::Text ? "text" : "image"; }

Modality modality_from_string(std::string_view s) {
  if (util::iequals(s, "text")) return Modality::Text;
  if (util::iequals(s, "image")) return Modality::Image;
  throw std::invalid_argument("unknown modality: '" + std::string(s) + "'");
}

bool EvidencePool::contains(std::string_view evidence_id) const {
  return find(evidence_id) != nullptr;
}

const EvidenceItem* EvidencePool::find(std::string_view evidence_id) const {
  const auto it = std::find_if(items.begin(), items.end(), [&](const EvidenceItem& e) {
    return e.evidence_id == evidence_id;
  });
  return it == items.end() ? nullptr : &*it;
}

void EvidencePool::add(EvidenceItem item) {
  if (contains(item.evidence_id))
    throw std::invalid_argument("duplicate evidence id in pool: " + item.evidence_id);
  items.push_back(std::move(item));
}

namespace {
void collect(std::vector<std::string>& out, const std::vector<std::string>& ids) {
  for (const auto& id : ids)
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
}
}  // namespace

std::vector<std::string> ReasoningOutput::cited_text_ids() const {
  std::vector<std::string> out;
  for (const auto& s : steps) collect(out, s.relevant_text_evidence_ids);
  collect(out, direct.relevant_text_evidence_ids);
  return out;
}

std::vector<std::string> ReasoningOutput::cited_image_ids() const {
  std::vector<std::string> out;
  for (const auto& s : steps) collect(out, s.relevant_image_evidence_ids);
  return out;
}

}  // namespace agentfact
