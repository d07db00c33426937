#include "agentfact/agents/prompt_template.hpp"
#include "agentfact/core/schema.hpp"

namespace agentfact {

namespace {

// Output format shared by both reasoning modes.
const char* kReasoningFormat = R"(Respond with JSON only, using exactly this structure:
{
  "my_understanding_of_claim": "<one sentence>",
  "validation_result": {
    "reasoning_steps": [
      {
        "step_name": "<short name>",
        "description": "<what this step checks>",
        "analysis_result": "<finding>",
        "relevant_evidence_summary": "<how the cited evidence bears on it>",
        "relevant_text_evidence_list": ["<text evidence_id>"],
        "relevant_image_evidence_list": ["<image evidence_id>"],
        "evidence_based_on_my_knowledge": ["<background fact used, if any>"]
      }
    ],
    "direct_fact_check_evidence": {
      "analysis_result": "<overall finding>",
      "relevant_evidence_summary": "<summary>",
      "relevant_text_evidence_list": ["<text evidence_id>"]
    },
    "predicted_label": "true | false | unproven",
    "final_sufficiency_confidence": "<1-5>"
  }
})";

std::string reasoning_system(const std::string& mode_intro) {
  return mode_intro + "\n" + kReasoningFormat +
         "\nEvidence ids look like \"1-2\" (round-ordinal). Cite only ids supplied in the "
         "request; if a step rests on background knowledge alone, leave its evidence lists "
         "empty and note the knowledge used.";
}

}  // namespace

PromptLibrary::PromptLibrary() {
  const auto add = [this](PromptTemplate t) { templates_[t.template_id] = std::move(t); };

  add({template_id::kPlan, schema_id::kPlan,
       R"(You are the strategy planning agent of a multimodal fact-checking workflow. Break the claim into checkable parts and decide what must be validated from the post and what must be looked up.
Plan the core assertion first, then supporting details. validation_list holds statements taken from the post that retrieval should confirm or refute; search_list holds background facts to look up.
Respond with JSON only, using exactly this structure:
{
  "reasoning_steps": [{"step": "1", "method": "<verification method>", "details": "<how it applies here>"}],
  "validation_list": [{"sentence": "<statement to validate>", "explanation": "<why it matters>"}],
  "search_list": [{"information_needed": "<fact to look up>"}]
}
Keep validation_list to at most {{max_validation_items}} entries and search_list to at most {{max_search_items}} entries. The same sentence must not appear in both lists.)",
       R"(Claim: {{claim}}
Post text: {{post_text}}
Claim date: {{claim_date}}
{{previous_section}})"});

  add({template_id::kQuery, schema_id::kQuery,
       R"(You are the text retrieval agent. Turn each listed item into one focused web search query.
Respond with JSON only:
{"queries": ["<query string>"]}
Return queries in the same order as the items, one per item. Do not repeat any already-used query.)",
       R"(Claim: {{claim}}
Items to research:
{{items}}
Already-used queries:
{{prior_queries}})"});

  add({template_id::kSummarize, schema_id::kSummarize,
       R"(You are the text retrieval agent. Keep only the search results that bear on the query and summarize each kept result in two or three sentences focused on what it says about the query.
Respond with JSON only:
{"summaries": [{"source_url": "<url copied exactly from a result>", "summary": "<focused summary>"}]}
Use only source_url values present in the results. Drop irrelevant results; an empty list is acceptable.)",
       R"(Query: {{query}}
Claim being checked: {{claim}}
Search results:
{{results}})"});

  add({template_id::kReliability, schema_id::kReliability,
       R"(You assess the reliability of a web source. Identify the publisher behind the URL and classify it.
Categories: reliable (established outlet with editorial standards), unreliable (known misinformation or content farm), satire (parody outlet), unsure (cannot judge), factcheck (dedicated fact-checking organization).
Fact-checker conclusions must not be used as evidence; their coverage can only be read in reverse, as a sign the story attracted scrutiny. Record how you applied this under fact_checker_usage.
Respond with JSON only:
{"source_identification": "<publisher>", "type": "reliable | unreliable | satire | unsure | factcheck", "reasoning": "<why>", "fact_checker_usage": "<reverse-use note, or empty>"})",
       R"(URL: {{url}})"});

  add({template_id::kReasonTemporary, schema_id::kReasoning,
       reasoning_system(
           "You are the reasoning agent in evidence-selection mode. Judge which of the "
           "supplied batch of evidence items actually help verify the claim, step by step. "
           "List an item's evidence_id in a step only when the item matters for the claim; "
           "if nothing in the batch helps, leave all evidence lists empty. predicted_label "
           "and final_sufficiency_confidence describe your provisional view from this batch "
           "alone."),
       R"(Claim: {{claim}}
Claim date: {{claim_date}}
Verification plan:
{{plan}}
{{image_section}}
Evidence batch:
{{evidence}}
{{previous_section}})"});

  add({template_id::kReasonAccumulated, schema_id::kReasoning,
       reasoning_system(
           "You are the reasoning agent in verdict mode. Using every useful evidence item "
           "gathered so far and the image analysis, reason step by step about the claim's "
           "veracity. predicted_label: true when the claim is substantiated, false when it "
           "is refuted, unproven when the evidence is insufficient either way. "
           "final_sufficiency_confidence: how sufficient the gathered evidence is for that "
           "verdict, from 1 (far from sufficient) to 5 (fully sufficient)."),
       R"(Claim: {{claim}}
Claim date: {{claim_date}}
Verification plan:
{{plan}}
{{image_section}}
Useful evidence so far:
{{evidence}}
{{previous_section}})"});

  add({template_id::kIrMatch, schema_id::kIrMatch,
       R"(You are the image analysis agent. The attached image is from the post being checked; a candidate match from reverse image search is described below. Classify their relationship:
- "Potentially From Same Source": likely the same underlying photo (crops, recompressions, edits).
- "Potentially From Same Event": a different photo of the same scene or moment.
- "No Close Relationship": neither.
When the relationship is one of the first two, estimate tampering_probability as a percentage from 0 (post image faithful to the match) to 100 (clearly manipulated) and explain in tampering_reasoning. When there is no close relationship, leave tampering_probability and tampering_reasoning empty.
Respond with JSON only:
{"relationship": "<one of the three phrases>", "relationship_reasoning": "<why>", "tampering_probability": "<0-100, or empty>", "tampering_reasoning": "<why, or empty>", "confidence": "<1-5>"})",
       R"(Claim: {{claim}}
Post image: {{post_image}}
Matched image: {{match_image_url}}
Match page: {{match_page_url}}
Match page title: {{match_page_title}}
Match page text: {{match_page_text}})"});

  add({template_id::kIrMiscaption, schema_id::kIrMiscaption,
       R"(You are the image analysis agent checking for miscaptioned use of an image. Judge how far the post's claim misrepresents what the matched page context shows about this image.
Score "Miscaption Rate" as a percentage: 0-20 the context accurately supports the claim's use of the image; above 20 up to 50 generally aligned or lacking context; above 50 up to 80 misleading use; above 80 the context is unrelated to or strongly contradicts the claim's use.
Respond with JSON only:
{"my_understanding_of_claim": "<one sentence>", "Miscaption Rate": "<0-100>", "Reasoning": "<why>"})",
       R"(Claim: {{claim}}
Post image: {{post_image}}
Matched page context:
{{match_context}})"});

  add({template_id::kExplanation, schema_id::kExplanation,
       R"(You are the explanation agent. Produce the final verdict and a readable justification from the accumulated reasoning, the evidence pool and the image analysis.
The 3-class label is TRUE, FALSE or UNPROVEN for the claim itself. The 2-class label is TRUE or FALSE, where FALSE covers both refuted and unproven claims, so the labels must agree: 3-class TRUE pairs with 2-class TRUE; 3-class FALSE or UNPROVEN pairs with 2-class FALSE.
Judge the truth of the claim, not of the post it discusses: when the claim asserts that a post is false and that post is indeed false, the claim is TRUE.
key_points: the decisive evidence-backed points, each citing the evidence ids it rests on in parentheses, like ('1-2'). Cite only ids from the supplied pool.
Respond with JSON only:
{"my_understanding_of_claim": "<one sentence>", "validation_result": {"2-class_authenticity_label": "TRUE | FALSE", "3-class_authenticity_label": "TRUE | FALSE | UNPROVEN", "reasoning_logic": "<verdict rationale>", "key_points": ["<point citing ids>"]}, "confidence_level": "<1-5>"})",
       R"(Claim: {{claim}}
Claim date: {{claim_date}}
Accumulated reasoning:
{{reasoning}}
{{image_section}}
Evidence pool:
{{evidence}})"});

  add({template_id::kCorpusPost, schema_id::kCorpusPost,
       R"(You extract the original social media post from a fact-checking article. The article text interleaves [IMAGE:url], [VIDEO:url] and [WEB:url] tags where media and links appeared.
Recover the post's own wording (not the article's commentary) and the media URLs belonging to the post itself.
Respond with JSON only:
{"post_text": "<post wording, or empty>", "post_media": ["<url copied exactly from a tag>"]}
Copy URLs exactly as they appear inside tags. Use [] when the post has no media.)",
       R"(Article:
{{article}})"});

  add({template_id::kCorpusRationale, schema_id::kCorpusRationale,
       R"(You extract the verdict rationale from a fact-checking article.
reasoning_logic: the article's overall reasoning for its verdict, condensed.
key_points: the distinct decisive points the verdict rests on, one string each.
Respond with JSON only:
{"reasoning_logic": "<condensed rationale>", "key_points": ["<decisive point>"]})",
       R"(Article:
{{article}}
Article verdict: {{raw_label}})"});

  add({template_id::kCorpusEvidence, schema_id::kCorpusEvidence,
       R"(You link one key point of a fact-checking article to the evidence the article offers for it.
Respond with JSON only:
{"evidence": [{"description": "<what the evidence is>", "links": ["<url copied exactly from a tag>"]}]}
Use only URLs that appear inside [IMAGE:...], [VIDEO:...] or [WEB:...] tags in the article. An evidence entry with no link keeps "links": [].)",
       R"(Article:
{{article}}
Key point: {{key_point}})"});

  add({template_id::kQcNecessity, schema_id::kQcNecessity,
       R"(You check whether verifying a claim requires looking at its attached image or the text alone suffices.
Answer yes when the image is integral to what is claimed, no when the text is self-contained, unsure when it cannot be determined.
Respond with JSON only:
{"image_required": "yes | no | unsure", "reason": "<why>"})",
       R"(Claim: {{claim}})"});

  add({template_id::kQcWatermark, schema_id::kQcWatermark,
       R"(You inspect the attached image for fact-checking watermarks or verdict stamps (overlay text such as FALSE, MISLEADING, FACT CHECK, or a fact-checker logo).
Respond with JSON only:
{"watermarked": true or false, "matched_keywords": ["<overlay words seen>"], "reason": "<why>"})",
       R"(Claim context: {{claim}}
The image is attached.)"});
}

}  // namespace agentfact
