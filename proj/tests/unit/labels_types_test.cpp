#include <doctest.h>

#include <stdexcept>

#include "agentfact/core/labels.hpp"
#include "agentfact/core/types.hpp"

using namespace agentfact;

TEST_CASE("veracity round trip and case-insensitive parsing") {
  CHECK(to_string(VeracityLabel::True) == "True");
  CHECK(to_string(VeracityLabel::False) == "False");
  CHECK(to_string(VeracityLabel::Unproven) == "Unproven");
  CHECK(veracity_from_string("true") == VeracityLabel::True);
  CHECK(veracity_from_string("FALSE") == VeracityLabel::False);
  CHECK(veracity_from_string("unPROVEN") == VeracityLabel::Unproven);
  CHECK_THROWS_AS(veracity_from_string("mixture"), std::invalid_argument);
  CHECK_THROWS_AS(veracity_from_string(""), std::invalid_argument);
}

TEST_CASE("binary collapse") {
  CHECK(collapse_to_binary(VeracityLabel::True) == BinaryLabel::True);
  CHECK(collapse_to_binary(VeracityLabel::False) == BinaryLabel::NotTrue);
  CHECK(collapse_to_binary(VeracityLabel::Unproven) == BinaryLabel::NotTrue);
  CHECK(to_string(BinaryLabel::True) == "true");
  CHECK(to_string(BinaryLabel::NotTrue) == "not_true");
  CHECK(binary_from_string("NOT_TRUE") == BinaryLabel::NotTrue);
  // The explanation agent reports TRUE/FALSE; FALSE means "not true".
  CHECK(binary_from_two_class("TRUE") == BinaryLabel::True);
  CHECK(binary_from_two_class("false") == BinaryLabel::NotTrue);
  CHECK_THROWS_AS(binary_from_two_class("unproven"), std::invalid_argument);
}

TEST_CASE("reliability and relationship vocabulary") {
  for (const auto r : {SourceReliability::Reliable, SourceReliability::Unreliable,
                       SourceReliability::Satire, SourceReliability::Unsure,
                       SourceReliability::Factcheck})
    CHECK(reliability_from_string(to_string(r)) == r);
  for (const auto r : {ImageRelationship::SameSource, ImageRelationship::SameEvent,
                       ImageRelationship::NoClose})
    CHECK(relationship_from_string(to_string(r)) == r);
  CHECK_THROWS_AS(reliability_from_string("trustworthy"), std::invalid_argument);
  CHECK_THROWS_AS(relationship_from_string("same"), std::invalid_argument);
}

TEST_CASE("evidence pool enforces unique ids") {
  EvidencePool pool{PoolRole::Reliable, {}};
  EvidenceItem a;
  a.evidence_id = "1-1";
  pool.add(a);
  CHECK(pool.contains("1-1"));
  CHECK_FALSE(pool.contains("1-2"));
  CHECK(pool.find("1-1") != nullptr);
  CHECK(pool.find("9-9") == nullptr);
  CHECK_THROWS_AS(pool.add(a), std::invalid_argument);
  CHECK(pool.size() == 1);
}

TEST_CASE("reasoning output collects citations in first-mention order") {
  ReasoningOutput r;
  ReasoningStepDetail s1;
  s1.relevant_text_evidence_ids = {"2-1", "1-1"};
  s1.relevant_image_evidence_ids = {"0-2"};
  ReasoningStepDetail s2;
  s2.relevant_text_evidence_ids = {"1-1", "3-1"};
  s2.relevant_image_evidence_ids = {"0-2", "0-1"};
  r.steps = {s1, s2};
  r.direct.relevant_text_evidence_ids = {"3-1", "4-1"};
  CHECK(r.cited_text_ids() == std::vector<std::string>{"2-1", "1-1", "3-1", "4-1"});
  CHECK(r.cited_image_ids() == std::vector<std::string>{"0-2", "0-1"});
}

TEST_CASE("modality strings") {
  CHECK(to_string(Modality::Text) == "text");
  CHECK(to_string(Modality::Image) == "image");
  CHECK(modality_from_string("IMAGE") == Modality::Image);
  CHECK_THROWS_AS(modality_from_string("video"), std::invalid_argument);
}
