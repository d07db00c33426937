#include "agentfact/orchestrator/workflow.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/providers/budget.hpp"
#include "agentfact/providers/fixture_store.hpp"
#include "agentfact/util/image_probe.hpp"
#include "agentfact/util/strings.hpp"
#include "agentfact/util/urls.hpp"

namespace agentfact {

using nlohmann::json;

namespace {

class TracingChatProvider : public ChatProvider {
 public:
  TracingChatProvider(std::shared_ptr<ChatProvider> inner, WorkflowTrace& trace)
      : inner_(std::move(inner)), trace_(trace) {}

  std::string chat(const ChatRequest& request) override {
    trace_.add("provider_call",
               {{"provider", "chat"},
                {"fixture_key", make_fixture_key("chat", canonical_chat_request(request))},
                {"schema", request.response_schema_id}});
    return inner_->chat(request);
  }

 private:
  std::shared_ptr<ChatProvider> inner_;
  WorkflowTrace& trace_;
};

std::string classify_error(const Error& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget_exceeded";
  if (dynamic_cast<const ReplayMiss*>(&e)) return "replay_miss";
  if (dynamic_cast<const CitationOutOfPool*>(&e)) return "citation_out_of_pool";
  if (dynamic_cast<const SchemaViolation*>(&e)) return "schema_violation";
  if (dynamic_cast<const TransportError*>(&e)) return "transport_error";
  if (dynamic_cast<const ProviderUnavailable*>(&e)) return "provider_unavailable";
  if (dynamic_cast<const ProviderError*>(&e)) return "provider_error";
  if (dynamic_cast<const ImageDecodeError*>(&e)) return "image_decode_error";
  if (dynamic_cast<const StoreIOError*>(&e)) return "store_io_error";
  return "error";
}

json config_summary(const WorkflowConfig& c) {
  return {{"evidence_batch_threshold", c.evidence_batch_threshold},
          {"confidence_threshold", c.confidence_threshold},
          {"max_reasoning_steps", c.max_reasoning_steps},
          {"max_replans", c.max_replans},
          {"max_results_per_query", c.max_results_per_query},
          {"chat_call_budget", c.chat_call_budget},
          {"strict_dates", c.strict_dates},
          {"retry_budget", c.agent.retry_budget},
          {"temperature", c.agent.temperature}};
}

}  // namespace

Orchestrator::Orchestrator(ProviderSet providers, DomainBlocklist blocklist,
                           WorkflowConfig config)
    : providers_(std::move(providers)), blocklist_(std::move(blocklist)), config_(config) {}

bool Orchestrator::should_terminate(const ReasoningOutput& latest, const WorkflowState& state,
                                    const WorkflowConfig& config) {
  const bool confident = latest.label != VeracityLabel::Unproven &&
                         latest.confidence >= config.confidence_threshold;
  return confident || state.step_count >= config.max_reasoning_steps;
}

Orchestrator::ImageBranchOutcome Orchestrator::run_image_branch(const MultimodalClaim& claim,
                                                                const AgentRuntime& agents,
                                                                WorkflowTrace& trace) const {
  if (!claim.image_ref) throw std::invalid_argument("claim carries no image");
  if (!providers_.reverse_image)
    throw ProviderUnavailable("no reverse image provider configured");
  const std::string& image_ref = *claim.image_ref;
  std::error_code ec;
  if (std::filesystem::is_regular_file(image_ref, ec))
    util::probe_image_file(image_ref);  // decodability gate for local files

  trace.add("provider_call",
            {{"provider", "reverse_image"},
             {"fixture_key",
              make_fixture_key("reverse_image", canonical_reverse_image_request(image_ref))}});
  const auto matches = providers_.reverse_image->reverse_image_search(image_ref);
  trace.add("reverse_search", {{"match_count", matches.size()}});

  std::vector<EvidenceItem> candidates;
  std::map<std::string, size_t> match_index;
  for (size_t i = 0; i < matches.size(); ++i) {
    EvidenceItem item;
    item.evidence_id = "0-" + std::to_string(i + 1);
    item.modality = Modality::Image;
    item.content = !matches[i].page_text.empty()
                       ? matches[i].page_text
                       : (!matches[i].page_title.empty() ? matches[i].page_title
                                                         : matches[i].page_url);
    item.source_url = matches[i].page_url;
    item.reliability = SourceReliability::Unsure;
    item.origin_query = "reverse_image_search";
    match_index[item.evidence_id] = i;
    candidates.push_back(std::move(item));
  }

  const auto outcome =
      filter_evidence(candidates, claim, blocklist_, {config_.strict_dates});
  for (const auto& [item, reason] : outcome.rejected)
    trace.add("evidence_rejected", {{"evidence_id", item.evidence_id},
                                    {"source_url", item.source_url},
                                    {"reason", to_string(reason)}});

  ImageBranchOutcome out;
  out.evidence = outcome.admitted;
  double tampering = -1.0, miscaption = -1.0;
  for (const auto& item : outcome.admitted) {
    trace.add("evidence_admitted", {{"evidence_id", item.evidence_id},
                                    {"source_url", item.source_url},
                                    {"modality", "image"}});
    const ReverseImageMatch& match = matches[match_index.at(item.evidence_id)];
    const IrMatchOutput ir = agents.analyze_image_relationship(image_ref, claim, match);
    trace.add("image_match", {{"evidence_id", item.evidence_id},
                              {"relationship", to_string(ir.relationship)}});
    out.analysis.matches.push_back({item.evidence_id, match.page_url, ir.relationship,
                                    ir.relationship_reasoning, ir.tampering_probability,
                                    ir.tampering_reasoning, ir.confidence});
    if (ir.tampering_probability)
      tampering = std::max(tampering, *ir.tampering_probability);
    if (ir.relationship != ImageRelationship::NoClose) {
      const std::string context =
          !match.page_text.empty() ? match.page_text : match.page_title;
      if (!context.empty()) {
        const MiscaptionAssessment mc = agents.detect_miscaption(claim, image_ref, context);
        trace.add("miscaption_check",
                  {{"evidence_id", item.evidence_id}, {"rate", mc.rate}});
        miscaption = std::max(miscaption, mc.rate);
      }
    }
  }
  if (tampering >= 0.0) out.analysis.tampering_score = tampering;
  if (miscaption >= 0.0) out.analysis.miscaption_score = miscaption;
  if (providers_.deepfake)
    out.analysis.deepfake_score = validated_deepfake_score(*providers_.deepfake, image_ref);
  return out;
}

RunResult Orchestrator::run_claim(const MultimodalClaim& claim) const {
  WorkflowTrace trace;
  WorkflowState state;
  auto budget = std::make_shared<CallBudget>(config_.chat_call_budget);
  try {
    if (util::trim(claim.text).empty()) throw EmptyInput("claim text is empty");
    if (!providers_.chat) throw ProviderUnavailable("no chat provider configured");
    if (!providers_.search) throw ProviderUnavailable("no search provider configured");
    trace.add("run_started", {{"claim_id", claim.claim_id}, {"config", config_summary(config_)}});

    auto chat = std::make_shared<TracingChatProvider>(
        std::make_shared<BudgetedChatProvider>(providers_.chat, budget), trace);
    const AgentRuntime agents(chat, config_.agent);

    std::optional<ImageAnalysisResult> image_analysis;
    std::vector<EvidenceItem> image_evidence;
    if (claim.image_ref) {
      trace.add("image_branch_started", {{"image", *claim.image_ref}});
      try {
        auto outcome = run_image_branch(claim, agents, trace);
        json scores = {{"tampering_score", outcome.analysis.tampering_score
                                               ? json(*outcome.analysis.tampering_score)
                                               : json(nullptr)},
                       {"miscaption_score", outcome.analysis.miscaption_score
                                                ? json(*outcome.analysis.miscaption_score)
                                                : json(nullptr)},
                       {"deepfake_score", outcome.analysis.deepfake_score
                                              ? json(*outcome.analysis.deepfake_score)
                                              : json(nullptr)}};
        image_analysis = std::move(outcome.analysis);
        image_evidence = std::move(outcome.evidence);
        trace.add("image_branch_completed", scores);
      } catch (const BudgetExceeded&) {
        throw;
      } catch (const Error& e) {
        // Text-only verification proceeds without the image signals.
        trace.add("image_branch_failed",
                  {{"kind", classify_error(e)}, {"warning", e.what()}});
      }
    }

    const auto citable_evidence = [&] {
      std::vector<EvidenceItem> out = state.useful_pool.items;
      out.insert(out.end(), image_evidence.begin(), image_evidence.end());
      return out;
    };

    std::map<std::string, SourceReliability> reliability_cache;
    const auto reliability_for = [&](const std::string& url) {
      std::string domain = util::registrable_domain(util::host_of(url));
      if (domain.empty()) domain = util::to_lower(url);
      if (const auto it = reliability_cache.find(domain); it != reliability_cache.end())
        return it->second;
      const ReliabilityAssessment assessment = agents.assess_source_reliability(url);
      trace.add("source_reliability",
                {{"domain", domain},
                 {"source", assessment.source_identification},
                 {"type", to_string(assessment.type)}});
      reliability_cache.emplace(domain, assessment.type);
      return assessment.type;
    };

    std::string termination_reason;
    std::optional<ReasoningOutput> previous_for_replan;
    Plan current_plan;

    const auto run_accumulated = [&] {
      const ReasoningOutput ra =
          agents.reason(claim, current_plan, citable_evidence(), image_analysis,
                        ReasoningMode::Accumulated, state.latest_accumulated);
      ++state.step_count;
      state.reasoning_history.push_back(ra);
      state.latest_accumulated = ra;
      trace.add("accumulated_reasoning", {{"step", state.step_count},
                                          {"label", to_string(ra.label)},
                                          {"confidence", ra.confidence}});
      if (should_terminate(ra, state, config_)) {
        const bool confident = ra.label != VeracityLabel::Unproven &&
                               ra.confidence >= config_.confidence_threshold;
        termination_reason = confident ? "confidence" : "step_cap";
        return true;
      }
      return false;
    };

    const auto process_batch = [&](const std::vector<EvidenceItem>& batch) {
      const ReasoningOutput rt = agents.reason(claim, current_plan, batch, image_analysis,
                                               ReasoningMode::Temporary, std::nullopt);
      const auto selected = rt.cited_text_ids();
      json batch_ids = json::array();
      for (const auto& item : batch) batch_ids.push_back(item.evidence_id);
      trace.add("temporary_reasoning", {{"batch", batch_ids}, {"selected", selected}});
      for (const auto& id : selected) {
        if (state.useful_pool.contains(id)) continue;
        if (const EvidenceItem* item = state.reliable_pool.find(id))
          state.useful_pool.add(*item);
      }
      if (selected.empty()) return false;
      return run_accumulated();
    };

    const auto already_used = [&](const std::string& query) {
      return std::any_of(state.used_queries.begin(), state.used_queries.end(),
                         [&](const std::string& q) {
                           return util::iequals(util::trim(q), util::trim(query));
                         });
    };

    struct PendingQuery {
      std::string query;
      std::string origin;
    };

    bool done = false;
    while (!done) {
      current_plan = agents.plan(claim, previous_for_replan);
      trace.add("plan_generated",
                {{"phase", state.replan_count},
                 {"validation_items", current_plan.validation_list.size()},
                 {"search_items", current_plan.search_list.size()}});

      std::vector<PendingQuery> pending;
      for (const auto& v : current_plan.validation_list)
        pending.push_back({v.sentence, "validation"});
      std::vector<std::string> search_texts;
      for (const auto& s : current_plan.search_list)
        search_texts.push_back(s.information_needed);
      const auto queries = agents.generate_queries(search_texts, claim, state.used_queries);
      if (!search_texts.empty() && queries.empty())
        trace.add("query_exhausted", {{"phase", state.replan_count}});
      else if (!queries.empty())
        trace.add("queries_generated", {{"queries", queries}});
      for (const auto& q : queries) pending.push_back({q, "search"});

      std::vector<EvidenceItem> unconsumed;
      for (const auto& pq : pending) {
        if (already_used(pq.query)) {
          trace.add("query_skipped", {{"query", pq.query}, {"reason", "duplicate"}});
          continue;
        }
        ++state.round;
        state.used_queries.push_back(pq.query);
        trace.add("retrieval_round_started",
                  {{"round", state.round}, {"query", pq.query}, {"origin", pq.origin}});
        trace.add("provider_call",
                  {{"provider", "search"},
                   {"fixture_key",
                    make_fixture_key("search", canonical_search_request(pq.query))}});
        const auto results =
            providers_.search->web_search(pq.query, config_.max_results_per_query);
        const SummaryList summaries = agents.filter_and_summarize(pq.query, claim, results);

        std::vector<EvidenceItem> candidates;
        int ordinal = 0;
        for (const auto& s : summaries.summaries) {
          EvidenceItem item;
          item.evidence_id =
              std::to_string(state.round) + "-" + std::to_string(++ordinal);
          item.modality = Modality::Text;
          item.content = s.summary;
          item.source_url = s.source_url;
          for (const auto& r : results)
            if (r.url == s.source_url) {
              item.publish_date = r.publish_date;
              break;
            }
          item.reliability = reliability_for(s.source_url);
          item.origin_query = pq.query;
          candidates.push_back(std::move(item));
        }

        const auto outcome =
            filter_evidence(candidates, claim, blocklist_, {config_.strict_dates});
        for (const auto& [item, reason] : outcome.rejected)
          trace.add("evidence_rejected", {{"evidence_id", item.evidence_id},
                                          {"source_url", item.source_url},
                                          {"reason", to_string(reason)}});
        for (const auto& item : outcome.admitted) {
          state.reliable_pool.add(item);
          unconsumed.push_back(item);
          trace.add("evidence_admitted", {{"evidence_id", item.evidence_id},
                                          {"source_url", item.source_url},
                                          {"reliability", to_string(item.reliability)}});
        }

        while (!done &&
               unconsumed.size() >= static_cast<size_t>(config_.evidence_batch_threshold)) {
          const std::vector<EvidenceItem> batch(
              unconsumed.begin(),
              unconsumed.begin() + config_.evidence_batch_threshold);
          unconsumed.erase(unconsumed.begin(),
                           unconsumed.begin() + config_.evidence_batch_threshold);
          done = process_batch(batch);
        }
        if (done) break;
      }

      if (!done && !unconsumed.empty()) {
        // Flush the sub-threshold remainder so admitted evidence is never dropped.
        const std::vector<EvidenceItem> batch = std::move(unconsumed);
        unconsumed.clear();
        done = process_batch(batch);
      }
      if (done) break;

      if (state.replan_count < config_.max_replans) {
        ++state.replan_count;
        previous_for_replan = state.latest_accumulated;
        trace.add("replan", {{"replan_count", state.replan_count}});
        continue;
      }
      termination_reason = "exhausted";
      break;
    }

    if (!state.latest_accumulated) {
      // The explanation step needs a reasoning input; run one verdict pass
      // over whatever is in the pool (possibly nothing).
      run_accumulated();
      if (termination_reason.empty()) termination_reason = "exhausted";
    }
    if (termination_reason.empty()) termination_reason = "exhausted";
    trace.add("termination", {{"reason", termination_reason}});

    Explanation explanation = agents.generate_explanation(
        claim, *state.latest_accumulated, citable_evidence(), image_analysis);
    trace.add("explanation_emitted", {{"label", to_string(explanation.label)},
                                      {"binary_label", to_string(explanation.binary_label)},
                                      {"confidence", explanation.confidence}});
    trace.add("run_completed", {{"chat_calls", budget->used()}});

    RunResult result;
    result.explanation = std::move(explanation);
    result.trace = std::move(trace);
    result.state = std::move(state);
    result.chat_calls_used = budget->used();
    result.termination_reason = termination_reason;
    return result;
  } catch (const WorkflowError&) {
    throw;
  } catch (const Error& e) {
    trace.add("run_failed", {{"kind", classify_error(e)}, {"message", e.what()}});
    throw WorkflowError(classify_error(e), e.what(), std::move(trace));
  } catch (const std::exception& e) {
    trace.add("run_failed", {{"kind", "internal_error"}, {"message", e.what()}});
    throw WorkflowError("internal_error", e.what(), std::move(trace));
  }
}

}  // namespace agentfact
