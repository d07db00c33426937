#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "agentfact/filter/evidence_filter.hpp"
#include "agentfact/util/dates.hpp"

using namespace agentfact;
namespace fs = std::filesystem;

namespace {

EvidenceItem item(std::string id, std::string url,
                  std::optional<util::Date> date = std::nullopt,
                  SourceReliability reliability = SourceReliability::Reliable) {
  EvidenceItem e;
  e.evidence_id = std::move(id);
  e.modality = Modality::Text;
  e.content = "summary";
  e.source_url = std::move(url);
  e.publish_date = date;
  e.reliability = reliability;
  return e;
}

MultimodalClaim claim_dated(const char* iso) {
  MultimodalClaim c;
  c.claim_id = "c1";
  c.text = "claim";
  c.post_text = "claim";
  c.claim_date = util::parse_date(iso);
  return c;
}

}  // namespace

TEST_CASE("blocklist matches case-insensitively anywhere in the url") {
  const auto bl = DomainBlocklist::builtin();
  CHECK(bl.matches("https://www.snopes.com/fact-check/x"));
  CHECK(bl.matches("https://WWW.SNOPES.COM/X"));
  CHECK(bl.matches("https://cdn.Politifact.com/img"));
  CHECK(bl.matches("https://example.com/some-fact-check-page"));  // substring, not just host
  CHECK(bl.matches("https://leadstories.com/article"));           // via "eadstories"
  CHECK_FALSE(bl.matches("https://www.example.com/news"));
  CHECK_FALSE(bl.matches("https://factual.example.org"));  // "factcheck" is not in "factual"
}

TEST_CASE("blocklist file loader skips comments and blanks") {
  const fs::path path = fs::temp_directory_path() / "agentfact_blocklist_test.txt";
  {
    std::ofstream out(path);
    out << "# custom additions\n\nbadsite\n  spaced-entry  \n";
  }
  const auto bl = DomainBlocklist::load(path);
  CHECK(bl.matches("https://badsite.example.com/x"));
  CHECK(bl.matches("https://spaced-entry.example.com/"));
  CHECK_FALSE(bl.matches("https://example.com/"));
  fs::remove(path);
}

TEST_CASE("date cutoff is strict-after") {
  const auto claim_date = util::parse_date("2024-05-10");
  CHECK_FALSE(is_after_cutoff(util::parse_date("2024-05-09"), claim_date));
  CHECK_FALSE(is_after_cutoff(util::parse_date("2024-05-10"), claim_date));  // same day admits
  CHECK(is_after_cutoff(util::parse_date("2024-05-11"), claim_date));
  CHECK_FALSE(is_after_cutoff(std::nullopt, claim_date));          // undated passes here
  CHECK_FALSE(is_after_cutoff(util::parse_date("2030-01-01"), std::nullopt));  // undated claim
}

TEST_CASE("filter order: blocked domain, then cutoff, then factcheck reliability") {
  const auto claim = claim_dated("2024-05-10");
  const auto bl = DomainBlocklist::builtin();

  // One item violating all three rules reports the blocked domain.
  const auto all_three = filter_evidence(
      {item("1-1", "https://snopes.com/x", util::parse_date("2024-06-01"),
            SourceReliability::Factcheck)},
      claim, bl);
  REQUIRE(all_three.rejected.size() == 1);
  CHECK(all_three.rejected[0].second == RejectReason::BlockedDomain);

  // Cutoff beats reliability.
  const auto two = filter_evidence(
      {item("1-1", "https://clean.example.com/x", util::parse_date("2024-06-01"),
            SourceReliability::Factcheck)},
      claim, bl);
  REQUIRE(two.rejected.size() == 1);
  CHECK(two.rejected[0].second == RejectReason::AfterCutoff);

  // A non-blocklisted site the reliability agent flags as a fact-checker.
  const auto one = filter_evidence(
      {item("1-1", "https://verify-desk.example.org/x", util::parse_date("2024-05-01"),
            SourceReliability::Factcheck)},
      claim, bl);
  REQUIRE(one.rejected.size() == 1);
  CHECK(one.rejected[0].second == RejectReason::FactcheckReliability);
}

TEST_CASE("filter admits in order and keeps satire or unreliable sources") {
  const auto claim = claim_dated("2024-05-10");
  const auto outcome = filter_evidence(
      {
          item("1-1", "https://a.example.com/1", util::parse_date("2024-05-01")),
          item("1-2", "https://b.example.com/2", std::nullopt, SourceReliability::Unreliable),
          item("1-3", "https://snopes.com/3"),
          item("1-4", "https://c.example.com/4", util::parse_date("2024-05-10"),
               SourceReliability::Satire),
          item("1-5", "https://d.example.com/5", util::parse_date("2024-05-11")),
      },
      claim, DomainBlocklist::builtin());
  REQUIRE(outcome.admitted.size() == 3);
  CHECK(outcome.admitted[0].evidence_id == "1-1");
  CHECK(outcome.admitted[1].evidence_id == "1-2");
  CHECK(outcome.admitted[2].evidence_id == "1-4");
  REQUIRE(outcome.rejected.size() == 2);
  CHECK(outcome.rejected[0].first.evidence_id == "1-3");
  CHECK(outcome.rejected[1].second == RejectReason::AfterCutoff);
}

TEST_CASE("strict dates mode rejects undated evidence") {
  const auto claim = claim_dated("2024-05-10");
  FilterConfig config;
  config.strict_dates = true;
  const auto outcome = filter_evidence(
      {item("1-1", "https://a.example.com/1"),
       item("1-2", "https://b.example.com/2", util::parse_date("2024-04-01"))},
      claim, DomainBlocklist::builtin(), config);
  REQUIRE(outcome.admitted.size() == 1);
  CHECK(outcome.admitted[0].evidence_id == "1-2");
  REQUIRE(outcome.rejected.size() == 1);
  CHECK(outcome.rejected[0].second == RejectReason::MissingDate);
}

TEST_CASE("reject reasons have stable names") {
  CHECK(to_string(RejectReason::BlockedDomain) == "blocked_domain");
  CHECK(to_string(RejectReason::AfterCutoff) == "after_cutoff");
  CHECK(to_string(RejectReason::FactcheckReliability) == "factcheck_reliability");
  CHECK(to_string(RejectReason::MissingDate) == "missing_date");
}
