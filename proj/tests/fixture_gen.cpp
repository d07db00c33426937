// Regenerates the end-to-end replay fixtures under tests/fixtures.
//
// Five claims, each with its own scripted provider set recorded into its own
// fixture directory, plus golden verdict/trace outputs and a manifest the
// acceptance suite uses to drive the CLI. Run from anywhere:
//
//   fixture_gen [repo_root]
//
// Regeneration is deterministic: recorded_at is pinned and the scripted
// providers are pure functions of the request.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/core/schema.hpp"
#include "agentfact/orchestrator/workflow.hpp"
#include "agentfact/providers/replay.hpp"
#include "agentfact/util/dates.hpp"
#include "support/scripted.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace agentfact;
using namespace agentfact::testsupport;

namespace {

constexpr const char* kRecordedAt = "2025-01-15T00:00:00Z";

std::optional<util::Date> d(const std::string& iso) { return util::parse_date(iso); }

SearchResult result(std::string url, std::string title, std::string snippet,
                    std::optional<util::Date> date = std::nullopt) {
  return {std::move(url), std::move(title), std::move(snippet), date};
}

json plan_response(const std::string& step, std::vector<std::string> validation,
                   std::vector<std::string> search) {
  Plan plan;
  plan.reasoning_steps.push_back({step, "web search", "Check coverage from independent outlets"});
  for (auto& v : validation) plan.validation_list.push_back({std::move(v), "Directly checkable"});
  for (auto& s : search) plan.search_list.push_back({std::move(s)});
  return to_schema_json(plan);
}

json queries_response(std::vector<std::string> queries) {
  return to_schema_json(QueryList{std::move(queries)});
}

json reasoning_response(const std::string& understanding, const std::string& analysis,
                        VeracityLabel label, int confidence, std::vector<std::string> text_ids,
                        std::vector<std::string> image_ids = {},
                        std::vector<std::string> knowledge = {}) {
  ReasoningOutput out;
  out.claim_understanding = understanding;
  ReasoningStepDetail step;
  step.step_name = "Weigh the evidence";
  step.description = "Compare the claim against the cited sources";
  step.analysis_result = analysis;
  step.relevant_evidence_summary = analysis;
  step.relevant_text_evidence_ids = text_ids;
  step.relevant_image_evidence_ids = std::move(image_ids);
  step.knowledge_notes = std::move(knowledge);
  out.steps.push_back(std::move(step));
  out.direct.analysis_result = analysis;
  out.direct.relevant_evidence_summary = analysis;
  out.direct.relevant_text_evidence_ids = std::move(text_ids);
  out.label = label;
  out.confidence = confidence;
  return to_schema_json(out);
}

json ir_response(ImageRelationship rel, const std::string& why, std::optional<double> tampering,
                 const std::string& tampering_why, int confidence) {
  IrMatchOutput out;
  out.relationship = rel;
  out.relationship_reasoning = why;
  out.tampering_probability = tampering;
  out.tampering_reasoning = tampering_why;
  out.confidence = confidence;
  return to_schema_json(out);
}

json miscaption_response(const std::string& understanding, double rate, const std::string& why) {
  return to_schema_json(MiscaptionAssessment{understanding, rate, why});
}

json eg_response(const std::string& understanding, VeracityLabel label,
                 const std::string& logic, std::vector<std::string> key_points, int confidence) {
  EgOutput out;
  out.claim_understanding = understanding;
  out.label = label;
  out.binary_label = collapse_to_binary(label);
  out.reasoning_logic = logic;
  out.key_points = std::move(key_points);
  out.confidence = confidence;
  return to_schema_json(out);
}

struct Story {
  std::string name;
  MultimodalClaim claim;
  std::shared_ptr<ScriptedChatProvider> chat = std::make_shared<ScriptedChatProvider>();
  std::shared_ptr<ScriptedSearchProvider> search = std::make_shared<ScriptedSearchProvider>();
  std::vector<ReverseImageMatch> matches;
  std::string expected_label;
  int expected_confidence = 0;
  std::string expected_termination;
};

// True verdict with an image: same-event match plus an unrelated stock photo,
// evidence from two text rounds, terminates on confidence.
Story story_claim1() {
  Story s;
  s.name = "claim1";
  s.claim.claim_id = "claim-e2e-1";
  s.claim.text = "The Eiffel Tower hosted a public light show on 14 July 2024.";
  s.claim.post_text = "Look at this from Paris last month!";
  s.claim.image_ref = "tests/fixtures/images/post1.png";
  s.claim.claim_date = d("2024-08-01");
  s.expected_label = "True";
  s.expected_confidence = 5;
  s.expected_termination = "confidence";

  s.matches = {
      {"https://img.paris-news.example.com/show.jpg",
       "https://www.paris-news.example.com/2024/07/15/eiffel-light-show",
       "Eiffel Tower lights up for Bastille Day",
       "The tower's light show on July 14 drew thousands of spectators."},
      {"https://img.stock.example.net/tower.jpg", "https://stock-photos.example.net/eiffel",
       "Eiffel Tower stock photography", ""},
  };

  s.chat->add(schema_id::kIrMatch, {"paris-news"},
              ir_response(ImageRelationship::SameEvent,
                          "The matched article covers the same celebration from another angle.",
                          10.0, "Lighting and crowd details are consistent across both shots.", 4));
  s.chat->add(schema_id::kIrMatch, {"stock-photos"},
              ir_response(ImageRelationship::NoClose,
                          "Generic daytime stock imagery, unrelated to the event.", std::nullopt,
                          "", 3));
  s.chat->add(schema_id::kIrMiscaption, {"Eiffel"},
              miscaption_response("A light show at the Eiffel Tower on 14 July 2024.", 20.0,
                                  "The caption matches the press coverage of the event."));

  s.chat->add(schema_id::kPlan, {"Eiffel"},
              plan_response(
                  "Confirm the light show happened on the stated date",
                  {"The Eiffel Tower hosted a public light show on 14 July 2024"},
                  {"Eiffel Tower Bastille Day 2024 program coverage"}));
  s.chat->add(schema_id::kQuery, {"Eiffel"},
              queries_response({"Eiffel Tower Bastille Day 2024 light show"}));

  s.search->add("hosted a public light show",
                {result("https://www.paris-news.example.com/2024/07/15/eiffel-light-show",
                        "Eiffel Tower lights up for Bastille Day",
                        "The July 14 display drew large crowds.", d("2024-07-15")),
                 result("https://www.snopes.com/fact-check/eiffel-light-show",
                        "Did the Eiffel Tower host a light show?",
                        "We looked into the viral posts.", d("2024-07-16")),
                 result("https://global-wire.example.org/paris-celebrations",
                        "Paris celebrates its national day",
                        "Fireworks and light displays across the capital.", d("2024-07-14"))});
  s.search->add("Bastille Day 2024 light show",
                {result("https://www.paris-news.example.com/2024/07/14/bastille-program",
                        "Bastille Day program", "Official schedule for July 14.",
                        d("2024-07-10")),
                 result("https://travel-blog.example.net/paris-july",
                        "July in Paris", "A traveler's notes from the festivities.")});

  s.chat->add(schema_id::kReasoning, {"Evidence batch:", "Eiffel"},
              reasoning_response("The claim places a public light show at the Eiffel Tower on "
                                 "14 July 2024.",
                                 "Two independent reports confirm the display on July 14.",
                                 VeracityLabel::Unproven, 3, {"1-1", "2-1"}));
  s.chat->add(schema_id::kReasoning, {"Useful evidence so far:", "Eiffel"},
              reasoning_response("The claim places a public light show at the Eiffel Tower on "
                                 "14 July 2024.",
                                 "Press coverage and the official program agree; the matched "
                                 "photo shows the same event.",
                                 VeracityLabel::True, 5, {"1-1", "2-1"}, {"0-1"}));
  s.chat->add(schema_id::kExplanation, {"Eiffel"},
              eg_response("The claim places a public light show at the Eiffel Tower on "
                          "14 July 2024.",
                          VeracityLabel::True,
                          "Independent press coverage and the official program both describe "
                          "the display, and the post image matches event photos.",
                          {"The official Bastille Day program lists the display [1-1]",
                           "Press photos of the show match the post image [0-1]"},
                          5));
  return s;
}

// False verdict with an image: same-source match flags heavy tampering and a
// miscaptioned context; text evidence debunks the claim. Confidence exit.
Story story_claim2() {
  Story s;
  s.name = "claim2";
  s.claim.claim_id = "claim-e2e-2";
  s.claim.text = "A photo shows a giant soda logo painted on the Moon in 2023.";
  s.claim.post_text = "They actually did it!";
  s.claim.image_ref = "tests/fixtures/images/post2.png";
  s.claim.claim_date = d("2024-01-10");
  s.expected_label = "False";
  s.expected_confidence = 5;
  s.expected_termination = "confidence";

  s.matches = {
      {"https://img.archive.example.com/moon.jpg",
       "https://archive-images.example.com/moon-original", "Lunar photograph, 2019",
       "Original unaltered lunar photograph from a 2019 survey."},
  };

  s.chat->add(schema_id::kIrMatch, {"archive-images"},
              ir_response(ImageRelationship::SameSource,
                          "The post image is a crop of the archived 2019 photograph.", 85.0,
                          "A logo has been composited onto the original surface.", 5));
  s.chat->add(schema_id::kIrMiscaption, {"soda"},
              miscaption_response("A soda logo painted on the Moon in 2023.", 90.0,
                                  "The source photo predates the claim and shows no logo."));

  s.chat->add(schema_id::kPlan, {"soda"},
              plan_response("Check for any credible report of lunar advertising",
                            {"A giant soda logo was painted on the Moon in 2023"},
                            {"Reports about advertising on the Moon in 2023"}));
  s.chat->add(schema_id::kQuery, {"soda"},
              queries_response({"Moon soda logo advertisement 2023"}));

  s.search->add("giant soda logo",
                {result("https://www.space-daily.example.com/moon-ad-hoax",
                        "No, there is no logo on the Moon",
                        "The viral image is a manipulated 2019 photograph.", d("2023-11-02")),
                 result("https://lunar-watch.example.org/no-logo",
                        "Lunar observers debunk logo image",
                        "Telescope imagery from November shows an unmarked surface.",
                        d("2023-11-05"))});
  s.search->add("Moon soda logo advertisement",
                {result("https://www.space-daily.example.com/advertising-claims",
                        "Advertising in space, separating fact from fiction",
                        "No company has placed imagery on the lunar surface.",
                        d("2023-12-01"))});

  s.chat->add(schema_id::kReasoning, {"Evidence batch:", "soda"},
              reasoning_response("The claim says a soda logo was painted on the Moon in 2023.",
                                 "Observatory reports and the debunk agree the image is altered.",
                                 VeracityLabel::Unproven, 3, {"1-1", "1-2"}));
  s.chat->add(schema_id::kReasoning, {"Useful evidence so far:", "soda"},
              reasoning_response("The claim says a soda logo was painted on the Moon in 2023.",
                                 "The source photograph predates the claim and telescope imagery "
                                 "shows an unmarked surface.",
                                 VeracityLabel::False, 5, {"1-1", "1-2"}, {"0-1"}));
  s.chat->add(schema_id::kExplanation, {"soda"},
              eg_response("The claim says a soda logo was painted on the Moon in 2023.",
                          VeracityLabel::False,
                          "The post image is a manipulated 2019 photograph and no credible "
                          "report describes any lunar advertising.",
                          {"The post image is a composite built on a 2019 photograph [0-1]",
                           "Independent observers report an unmarked surface [1-1][1-2]"},
                          5));
  return s;
}

// Unproven: every candidate source is rejected (blocked domains, then a
// post-claim-date leak), replans exhaust, and the forced verdict pass runs
// over an empty pool.
Story story_claim3() {
  Story s;
  s.name = "claim3";
  s.claim.claim_id = "claim-e2e-3";
  s.claim.text = "An anonymous intern claims the mayor of Smallville owns a secret island.";
  s.claim.post_text = "An anonymous intern claims the mayor of Smallville owns a secret island.";
  s.claim.claim_date = d("2024-05-01");
  s.expected_label = "Unproven";
  s.expected_confidence = 2;
  s.expected_termination = "exhausted";

  s.chat->add(schema_id::kPlan, {"Smallville"},
              plan_response("Look for records tying the mayor to island property",
                            {"The mayor of Smallville owns a secret island"},
                            {"Smallville mayor asset records"}));

  s.chat->add(schema_id::kQuery, {"- Smallville mayor records 2024"}, queries_response({}));
  s.chat->add(schema_id::kQuery, {"- Smallville mayor island ownership"},
              queries_response({"Smallville mayor records 2024"}));
  s.chat->add(schema_id::kQuery, {"Smallville"},
              queries_response({"Smallville mayor island ownership"}));

  s.search->add("owns a secret island",
                {result("https://www.snopes.com/fact-check/smallville-island",
                        "Does the mayor own an island?", "We could not verify the rumor.",
                        d("2024-04-20")),
                 result("https://www.politifact.com/smallville-mayor",
                        "Island ownership claim rated", "No records support the claim.",
                        d("2024-04-22"))});
  s.search->add("island ownership",
                {result("https://rumor-mill.example.net/island",
                        "Island rumors resurface", "A later recap of the viral story.",
                        d("2024-06-01"))});

  s.chat->add(schema_id::kReasoning, {"Smallville"},
              reasoning_response(
                  "The claim asserts the mayor of Smallville secretly owns an island.",
                  "No admissible evidence was retrieved; the claim rests on an anonymous "
                  "source.",
                  VeracityLabel::Unproven, 2, {}, {},
                  {"Anonymous single-source claims are unverifiable without records."}));
  s.chat->add(schema_id::kExplanation, {"Smallville"},
              eg_response("The claim asserts the mayor of Smallville secretly owns an island.",
                          VeracityLabel::Unproven,
                          "Every retrieved source was inadmissible, so the claim stays "
                          "unverified.",
                          {}, 2));
  return s;
}

// Replan that changes the verdict: the first accumulated pass is unsure, the
// refreshed plan finds the decisive records. Confidence exit at threshold.
Story story_claim4() {
  Story s;
  s.name = "claim4";
  s.claim.claim_id = "claim-e2e-4";
  s.claim.text = "Smallville's old mill burned down during the 2022 harvest festival.";
  s.claim.post_text = "Smallville's old mill burned down during the 2022 harvest festival.";
  s.claim.claim_date = d("2023-01-15");
  s.expected_label = "False";
  s.expected_confidence = 4;
  s.expected_termination = "confidence";

  s.chat->add(schema_id::kPlan, {"Previous accumulated reasoning"},
              plan_response("Check the mill's status after the festival",
                            {"Local records confirm the Smallville mill stood intact after 2022"},
                            {"Smallville mill status after 2022"}));
  s.chat->add(schema_id::kPlan, {"old mill"},
              plan_response("Confirm whether a fire occurred at the festival",
                            {"The old mill in Smallville burned down during the 2022 harvest "
                             "festival"},
                            {"Smallville harvest festival 2022 incident reports"}));

  s.chat->add(schema_id::kQuery, {"- Smallville mill fire 2022"},
              queries_response({"Smallville mill 2023 photographs"}));
  s.chat->add(schema_id::kQuery, {"old mill"},
              queries_response({"Smallville mill fire 2022"}));

  s.search->add("burned down",
                {result("https://county-ledger.example.com/mill-rumor",
                        "Rumors of a mill fire spread online",
                        "Social posts claim the mill burned during the festival.",
                        d("2022-10-05")),
                 result("https://tall-tales.example.net/mill", "The night the mill burned",
                        "A dramatic retelling of the supposed blaze.")});
  s.search->add("mill fire 2022",
                {result("https://county-ledger.example.com/festival-recap",
                        "Harvest festival wraps up", "No incidents were reported.",
                        d("2022-10-02"))});
  s.search->add("stood intact",
                {result("https://county-ledger.example.com/mill-standing",
                        "Mill tours resume in December",
                        "The historic mill reopened to visitors in December 2022.",
                        d("2022-12-01"))});
  s.search->add("2023 photographs",
                {result("https://photo-archive.example.org/mill-2023",
                        "Smallville mill, January 2023", "Recent photographs of the mill.",
                        d("2023-01-02")),
                 result("https://gazette.example.com/mill-tour", "Walking tour of the old mill",
                        "The mill remains a centerpiece of the town.", d("2022-12-20"))});

  s.chat->add(schema_id::kReasoning, {"Evidence batch:", "mill-standing"},
              reasoning_response("The claim says the mill burned down at the 2022 festival.",
                                 "Tour listings and fresh photographs show the mill standing "
                                 "after the festival.",
                                 VeracityLabel::Unproven, 3, {"3-1", "4-1"}));
  s.chat->add(schema_id::kReasoning, {"Evidence batch:", "mill-rumor"},
              reasoning_response("The claim says the mill burned down at the 2022 festival.",
                                 "Only the rumor report is relevant; the retelling is "
                                 "unsourced.",
                                 VeracityLabel::Unproven, 3, {"1-1"}));
  s.chat->add(schema_id::kReasoning, {"Useful evidence so far:", "mill-standing"},
              reasoning_response("The claim says the mill burned down at the 2022 festival.",
                                 "December tours and January photographs show the mill intact, "
                                 "contradicting the rumor.",
                                 VeracityLabel::False, 4, {"3-1", "4-1", "1-1"}));
  s.chat->add(schema_id::kReasoning, {"Useful evidence so far:", "old mill"},
              reasoning_response("The claim says the mill burned down at the 2022 festival.",
                                 "Only rumor coverage so far; no report confirms or denies a "
                                 "fire.",
                                 VeracityLabel::Unproven, 2, {"1-1"}));
  s.chat->add(schema_id::kExplanation, {"old mill"},
              eg_response("The claim says the mill burned down at the 2022 festival.",
                          VeracityLabel::False,
                          "Post-festival tours and January 2023 photographs show the mill "
                          "intact; only unsourced rumors describe a fire.",
                          {"The mill reopened for tours in December 2022 [3-1]",
                           "January 2023 photographs show the mill standing [4-1]",
                           "The fire story traces back to unsourced social posts [1-1]"},
                          4));
  return s;
}

// Step-cap exit: every accumulated pass stays Unproven while six retrieval
// rounds keep feeding full batches, so the reasoning cap ends the run.
Story story_claim5() {
  Story s;
  s.name = "claim5";
  s.claim.claim_id = "claim-e2e-5";
  s.claim.text = "Marble Canyon was closed to visitors throughout 2021.";
  s.claim.post_text = "Marble Canyon was closed to visitors throughout 2021.";
  s.claim.claim_date = d("2022-03-01");
  s.expected_label = "Unproven";
  s.expected_confidence = 2;
  s.expected_termination = "step_cap";

  s.chat->add(schema_id::kPlan, {"Previous accumulated reasoning", "\"4-1\""},
              plan_response("Check tour operator activity during 2021",
                            {"News archives describe Marble Canyon tours operating in 2021"},
                            {"Marble Canyon tour operator schedules 2021"}));
  s.chat->add(schema_id::kPlan, {"Previous accumulated reasoning"},
              plan_response("Check official closure bulletins",
                            {"Park service bulletins list Marble Canyon closures in 2021"},
                            {"Marble Canyon ranger logs 2021"}));
  s.chat->add(schema_id::kPlan, {"Marble"},
              plan_response("Establish the canyon's visitor status for 2021",
                            {"Marble Canyon remained closed for all of 2021"},
                            {"Marble Canyon visitor statistics 2021"}));

  s.chat->add(schema_id::kQuery, {"ranger logs"},
              queries_response({"Marble Canyon ranger log entries 2021"}));
  s.chat->add(schema_id::kQuery, {"tour operator schedules"},
              queries_response({"Marble Canyon tour schedules 2021"}));
  s.chat->add(schema_id::kQuery, {"Marble"},
              queries_response({"Marble Canyon 2021 visitor numbers"}));

  const auto six = [](const std::string& stem) {
    std::vector<SearchResult> results;
    for (int i = 1; i <= 6; ++i) {
      const std::string domain = i % 2 ? "https://canyon-times.example.com/"
                                       : "https://desert-post.example.org/";
      results.push_back(result(domain + stem + "-" + std::to_string(i),
                               "Marble Canyon report " + std::to_string(i),
                               "Conflicting accounts of access during 2021.",
                               d("2021-0" + std::to_string((i % 6) + 1) + "-15")));
    }
    return results;
  };
  s.search->add("remained closed", six("closure"));
  s.search->add("visitor numbers", six("visitors"));
  s.search->add("bulletins list", six("bulletin"));
  s.search->add("ranger log entries", six("ranger"));
  s.search->add("tours operating", six("tours"));
  s.search->add("tour schedules", six("schedule"));

  // No reasoning or explanation rules: the generic fallback cites whatever
  // the prompt offers and never grows confident, which is the point here.
  return s;
}

struct GeneratedStory {
  Story story;
  RunResult result;
};

GeneratedStory generate(Story story, const fs::path& root) {
  const fs::path store_dir = root / "e2e" / story.name;
  fs::remove_all(store_dir);
  fs::create_directories(store_dir);

  auto store = std::make_shared<FixtureStore>(store_dir, /*create=*/true);
  store->set_recorded_at(kRecordedAt);

  ProviderSet providers;
  providers.chat = std::make_shared<RecordingChatProvider>(story.chat, store);
  providers.search = std::make_shared<RecordingSearchProvider>(story.search, store);
  providers.reverse_image = std::make_shared<RecordingReverseImageProvider>(
      std::make_shared<ScriptedReverseImageProvider>(story.matches), store);
  providers.deepfake = std::make_shared<ConstantDeepfakeScorer>(0.1);

  const Orchestrator orchestrator(providers, DomainBlocklist::builtin());
  RunResult result = orchestrator.run_claim(story.claim);

  const fs::path golden_dir = root / "golden" / story.name;
  fs::remove_all(golden_dir);
  fs::create_directories(golden_dir);
  std::ofstream(golden_dir / "verdict.json", std::ios::binary)
      << json(result.explanation).dump(2) + "\n";
  std::ofstream(golden_dir / "trace.jsonl", std::ios::binary) << result.trace.to_jsonl();

  return {std::move(story), std::move(result)};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path repo_root = argc > 1 ? fs::path(argv[1]) : fs::current_path();
  std::error_code ec;
  fs::current_path(repo_root, ec);
  if (ec) {
    std::cerr << "cannot enter " << repo_root << ": " << ec.message() << "\n";
    return 1;
  }

  const fs::path root = "tests/fixtures";
  fs::create_directories(root / "images");
  {
    std::ofstream(root / "images/post1.png", std::ios::binary)
        << agentfact::testsupport::make_png_bytes(640, 480);
    std::ofstream(root / "images/post2.png", std::ios::binary)
        << agentfact::testsupport::make_png_bytes(512, 384);
  }

  const std::vector<Story> stories = {story_claim1(), story_claim2(), story_claim3(),
                                      story_claim4(), story_claim5()};

  json manifest = json::array();
  bool ok = true;
  for (const auto& story : stories) {
    GeneratedStory generated = generate(story, root);
    const auto& result = generated.result;
    const std::string label = to_string(result.explanation.label);

    const bool matches = label == story.expected_label &&
                         result.explanation.confidence == story.expected_confidence &&
                         result.termination_reason == story.expected_termination;
    ok = ok && matches;
    std::cout << story.name << ": " << label << " conf " << result.explanation.confidence
              << " termination " << result.termination_reason << " chat_calls "
              << result.chat_calls_used << (matches ? "" : "  <-- UNEXPECTED") << "\n";

    json entry = {
        {"name", story.name},
        {"claim_id", story.claim.claim_id},
        {"claim", story.claim.text},
        {"post", story.claim.post_text},
        {"date", util::format_date(*story.claim.claim_date)},
        {"fixtures", (root / "e2e" / story.name).generic_string()},
        {"golden", (root / "golden" / story.name).generic_string()},
        {"expected_label", story.expected_label},
        {"expected_confidence", story.expected_confidence},
        {"expected_termination", story.expected_termination},
        {"image", story.claim.image_ref ? json(*story.claim.image_ref) : json(nullptr)},
    };
    manifest.push_back(std::move(entry));
  }

  std::ofstream(root / "e2e" / "manifest.json", std::ios::binary) << manifest.dump(2) + "\n";
  std::cout << (ok ? "all stories behaved as expected\n" : "STORY MISMATCH, see above\n");
  return ok ? 0 : 1;
}
