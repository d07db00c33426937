#include "agentfact/filter/evidence_filter.hpp"

#include <fstream>

#include "agentfact/errors.hpp"
#include "agentfact/util/strings.hpp"

namespace agentfact {

DomainBlocklist DomainBlocklist::builtin() {
  return DomainBlocklist{{
      "snopes",
      "politifact",
      "factcheck",
      "truthorfiction",
      "hoax-slayer",
      "eadstories",
      "opensecrets",
      "fullfact",
      "checkyourfact",
      "realitycheck",
      "fact-check",
  }};
}

DomainBlocklist DomainBlocklist::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw StoreIOError("cannot open blocklist file: " + file.string());
  DomainBlocklist out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string entry = util::trim(line);
    if (!entry.empty()) out.substrings.push_back(util::to_lower(entry));
  }
  return out;
}

bool DomainBlocklist::matches(std::string_view url) const {
  const std::string lowered = util::to_lower(url);
  for (const auto& s : substrings)
    if (lowered.find(s) != std::string::npos) return true;
  return false;
}

bool is_blocked_domain(std::string_view url, const DomainBlocklist& blocklist) {
  return blocklist.matches(url);
}

bool is_after_cutoff(const std::optional<util::Date>& evidence_date,
                     const std::optional<util::Date>& claim_date) {
  if (!evidence_date || !claim_date) return false;
  return std::chrono::sys_days(*evidence_date) > std::chrono::sys_days(*claim_date);
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::BlockedDomain: return "blocked_domain";
    case RejectReason::AfterCutoff: return "after_cutoff";
    case RejectReason::FactcheckReliability: return "factcheck_reliability";
    case RejectReason::MissingDate: return "missing_date";
  }
  return "blocked_domain";
}

FilterOutcome filter_evidence(const std::vector<EvidenceItem>& candidates,
                              const MultimodalClaim& claim,
                              const DomainBlocklist& blocklist,
                              const FilterConfig& config) {
  FilterOutcome outcome;
  for (const auto& item : candidates) {
    if (is_blocked_domain(item.source_url, blocklist)) {
      outcome.rejected.emplace_back(item, RejectReason::BlockedDomain);
    } else if (is_after_cutoff(item.publish_date, claim.claim_date)) {
      outcome.rejected.emplace_back(item, RejectReason::AfterCutoff);
    } else if (config.strict_dates && claim.claim_date && !item.publish_date) {
      outcome.rejected.emplace_back(item, RejectReason::MissingDate);
    } else if (item.reliability == SourceReliability::Factcheck) {
      outcome.rejected.emplace_back(item, RejectReason::FactcheckReliability);
    } else {
      outcome.admitted.push_back(item);
    }
  }
  return outcome;
}

}  // namespace agentfact
