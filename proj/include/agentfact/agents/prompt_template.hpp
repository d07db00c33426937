#pragma once

#include <map>
#include <string>
#include <vector>

namespace agentfact {

struct PromptTemplate {
  std::string template_id;
  std::string schema_id;  // response schema this template asks for
  std::string system_text;
  std::string user_skeleton;  // {{placeholder}} slots
};

// Substitutes {{name}} slots from bindings. Every slot must be bound
// (TemplateError otherwise); unused bindings are allowed. Values are inserted
// verbatim and never re-expanded.
std::string render_template(const std::string& skeleton,
                            const std::map<std::string, std::string>& bindings);

// Placeholder names appearing in a skeleton, in order of first appearance.
std::vector<std::string> template_placeholders(const std::string& skeleton);

class PromptLibrary {
 public:
  static const PromptLibrary& instance();

  const PromptTemplate& get(const std::string& template_id) const;
  std::vector<std::string> ids() const;

 private:
  PromptLibrary();
  std::map<std::string, PromptTemplate> templates_;
};

namespace template_id {
inline constexpr const char* kPlan = "sp-v1";
inline constexpr const char* kQuery = "tr-query-v1";
inline constexpr const char* kSummarize = "tr-summarize-v1";
inline constexpr const char* kReliability = "tr-reliability-v1";
inline constexpr const char* kReasonTemporary = "r-temporary-v1";
inline constexpr const char* kReasonAccumulated = "r-accumulated-v1";
inline constexpr const char* kIrMatch = "ir-match-v1";
inline constexpr const char* kIrMiscaption = "ir-miscaption-v1";
inline constexpr const char* kExplanation = "eg-v1";
inline constexpr const char* kCorpusPost = "corpus-post-v1";
inline constexpr const char* kCorpusRationale = "corpus-rationale-v1";
inline constexpr const char* kCorpusEvidence = "corpus-evidence-v1";
inline constexpr const char* kQcNecessity = "qc-necessity-v1";
inline constexpr const char* kQcWatermark = "qc-watermark-v1";
}  // namespace template_id

}  // namespace agentfact
