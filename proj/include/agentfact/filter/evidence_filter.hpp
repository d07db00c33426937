#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agentfact/core/types.hpp"

namespace agentfact {

// Substring blocklist matched against the lowercased evidence URL.
struct DomainBlocklist {
  std::vector<std::string> substrings;

  // The built-in fact-checking site list.
  static DomainBlocklist builtin();
  // One substring per line, '#' starts a comment, blank lines ignored.
  static DomainBlocklist load(const std::filesystem::path& file);

  bool matches(std::string_view url) const;
};

bool is_blocked_domain(std::string_view url, const DomainBlocklist& blocklist);

// Strict-after rule: evidence dated after the claim date is leakage; the same
// day is admitted. Undated evidence passes here (strict mode is handled by the
// filter itself).
bool is_after_cutoff(const std::optional<util::Date>& evidence_date,
                     const std::optional<util::Date>& claim_date);

enum class RejectReason { BlockedDomain, AfterCutoff, FactcheckReliability, MissingDate };

std::string to_string(RejectReason r);

struct FilterConfig {
  // When set, undated evidence is rejected instead of admitted.
  bool strict_dates = false;
};

struct FilterOutcome {
  std::vector<EvidenceItem> admitted;
  std::vector<std::pair<EvidenceItem, RejectReason>> rejected;
};

// Order-preserving. An item failing several rules reports the first failure
// in the order: blocked domain, date cutoff, factcheck reliability.
FilterOutcome filter_evidence(const std::vector<EvidenceItem>& candidates,
                              const MultimodalClaim& claim,
                              const DomainBlocklist& blocklist,
                              const FilterConfig& config = {});

}  // namespace agentfact
