#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "agentfact/core/json_codec.hpp"
#include "agentfact/core/labels.hpp"
#include "agentfact/corpus/builder.hpp"
#include "agentfact/corpus/split.hpp"
#include "agentfact/errors.hpp"
#include "agentfact/eval/metrics.hpp"
#include "agentfact/eval/stats.hpp"
#include "agentfact/filter/evidence_filter.hpp"
#include "agentfact/orchestrator/workflow.hpp"
#include "agentfact/providers/live.hpp"
#include "agentfact/providers/provider.hpp"
#include "agentfact/providers/replay.hpp"
#include "agentfact/util/dates.hpp"
#include "agentfact/util/strings.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace agentfact;

// ---------------------------------------------------------------------------
// Configuration plumbing. Precedence: flag > environment > config file >
// built-in default. The config file is plain "key = value" lines with '#'
// comments.

struct ConfigFile {
  std::map<std::string, std::string> values;

  static ConfigFile load(const fs::path& path) {
    ConfigFile cf;
    std::ifstream in(path);
    if (!in) throw StoreIOError("cannot read config file: " + path.string());
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = util::trim(line.substr(0, eq));
      const std::string value = util::trim(line.substr(eq + 1));
      if (!key.empty()) cf.values[key] = value;
    }
    return cf;
  }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

std::optional<std::string> env_value(const char* name) {
  if (name == nullptr) return std::nullopt;
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::string resolve_string(const std::optional<std::string>& flag, const char* env,
                           const std::string& file_key, const ConfigFile& cf,
                           std::string fallback) {
  if (flag) return *flag;
  if (const auto e = env_value(env)) return *e;
  if (const auto f = cf.get(file_key)) return *f;
  return fallback;
}

int resolve_int(const std::optional<int>& flag, const std::string& file_key,
                const ConfigFile& cf, int fallback) {
  if (flag) return *flag;
  if (const auto f = cf.get(file_key)) return std::stoi(*f);
  return fallback;
}

double resolve_double(const std::optional<double>& flag, const std::string& file_key,
                      const ConfigFile& cf, double fallback) {
  if (flag) return *flag;
  if (const auto f = cf.get(file_key)) return std::stod(*f);
  return fallback;
}

bool resolve_bool(bool flag_set, const std::string& file_key, const ConfigFile& cf,
                  bool fallback) {
  if (flag_set) return true;
  if (const auto f = cf.get(file_key))
    return *f == "true" || *f == "1" || *f == "yes" || *f == "on";
  return fallback;
}

// Options shared by every command that drives the pipeline.
struct ProviderOptions {
  std::string mode = "replay";  // live | record | replay
  std::optional<std::string> fixtures;
  std::optional<std::string> blocklist_path;
  std::optional<std::string> config_path;

  std::optional<std::string> chat_base_url;
  std::optional<std::string> chat_model;
  std::optional<std::string> search_base_url;
  std::optional<std::string> vision_base_url;

  std::optional<int> batch_threshold;
  std::optional<int> confidence_threshold;
  std::optional<int> max_steps;
  std::optional<int> max_replans;
  std::optional<int> max_results;
  std::optional<int> chat_budget;
  std::optional<int> retry_budget;
  std::optional<double> deepfake_score;
  bool strict_dates = false;
};

void add_provider_options(CLI::App* cmd, ProviderOptions& opts) {
  cmd->add_option("--mode", opts.mode, "Provider mode: live, record or replay")
      ->check(CLI::IsMember({"live", "record", "replay"}))
      ->capture_default_str();
  cmd->add_option("--fixtures", opts.fixtures, "Fixture directory for record/replay modes");
  cmd->add_option("--blocklist", opts.blocklist_path,
                  "Extra leakage blocklist file (one substring per line)");
  cmd->add_option("--config", opts.config_path, "Config file (key = value lines)");
  cmd->add_option("--chat-base-url", opts.chat_base_url, "Chat API base URL");
  cmd->add_option("--chat-model", opts.chat_model, "Chat model name");
  cmd->add_option("--search-base-url", opts.search_base_url, "Search API base URL");
  cmd->add_option("--vision-base-url", opts.vision_base_url, "Reverse image API base URL");
  cmd->add_option("--batch-threshold", opts.batch_threshold,
                  "Unconsumed evidence count that triggers a reasoning pass");
  cmd->add_option("--confidence-threshold", opts.confidence_threshold,
                  "Sufficiency confidence that ends the run");
  cmd->add_option("--max-steps", opts.max_steps, "Accumulated reasoning step cap");
  cmd->add_option("--max-replans", opts.max_replans, "Replanning rounds after the first plan");
  cmd->add_option("--max-results", opts.max_results, "Search results kept per query");
  cmd->add_option("--chat-budget", opts.chat_budget, "Chat calls allowed per claim");
  cmd->add_option("--retry-budget", opts.retry_budget,
                  "Re-asks per agent call after schema violations");
  cmd->add_option("--deepfake-score", opts.deepfake_score,
                  "Constant deepfake probability for the offline scorer");
  cmd->add_flag("--strict-dates", opts.strict_dates, "Reject undated evidence");
}

ConfigFile load_config(const ProviderOptions& opts) {
  if (opts.config_path) return ConfigFile::load(*opts.config_path);
  return {};
}

WorkflowConfig build_workflow_config(const ProviderOptions& opts, const ConfigFile& cf) {
  WorkflowConfig wf;
  wf.evidence_batch_threshold =
      resolve_int(opts.batch_threshold, "batch_threshold", cf, wf.evidence_batch_threshold);
  wf.confidence_threshold = resolve_int(opts.confidence_threshold, "confidence_threshold", cf,
                                        wf.confidence_threshold);
  wf.max_reasoning_steps = resolve_int(opts.max_steps, "max_steps", cf, wf.max_reasoning_steps);
  wf.max_replans = resolve_int(opts.max_replans, "max_replans", cf, wf.max_replans);
  wf.max_results_per_query =
      resolve_int(opts.max_results, "max_results", cf, wf.max_results_per_query);
  wf.chat_call_budget = resolve_int(opts.chat_budget, "chat_budget", cf, wf.chat_call_budget);
  wf.strict_dates = resolve_bool(opts.strict_dates, "strict_dates", cf, false);
  wf.agent.retry_budget = resolve_int(opts.retry_budget, "retry_budget", cf,
                                      wf.agent.retry_budget);
  return wf;
}

DomainBlocklist build_blocklist(const ProviderOptions& opts, const ConfigFile& cf) {
  DomainBlocklist blocklist = DomainBlocklist::builtin();
  std::optional<std::string> path = opts.blocklist_path;
  if (!path) path = cf.get("blocklist");
  if (path) {
    const DomainBlocklist extra = DomainBlocklist::load(*path);
    blocklist.substrings.insert(blocklist.substrings.end(), extra.substrings.begin(),
                                extra.substrings.end());
  }
  return blocklist;
}

struct BuiltProviders {
  ProviderSet set;
  std::shared_ptr<FixtureStore> store;  // null in live mode
};

BuiltProviders build_providers(const ProviderOptions& opts, const ConfigFile& cf) {
  BuiltProviders built;

  LiveChatConfig chat_cfg;
  chat_cfg.base_url = resolve_string(opts.chat_base_url, "CHAT_BASE_URL", "chat_base_url", cf,
                                     chat_cfg.base_url);
  chat_cfg.model =
      resolve_string(opts.chat_model, "CHAT_MODEL", "chat_model", cf, chat_cfg.model);
  chat_cfg.api_key = resolve_string(std::nullopt, "CHAT_API_KEY", "chat_api_key", cf, "");

  LiveSearchConfig search_cfg;
  search_cfg.base_url = resolve_string(opts.search_base_url, "SEARCH_BASE_URL",
                                       "search_base_url", cf, search_cfg.base_url);
  search_cfg.api_key = resolve_string(std::nullopt, "SEARCH_API_KEY", "search_api_key", cf, "");

  LiveReverseImageConfig vision_cfg;
  vision_cfg.base_url = resolve_string(opts.vision_base_url, "VISION_BASE_URL",
                                       "vision_base_url", cf, vision_cfg.base_url);
  vision_cfg.api_key = resolve_string(std::nullopt, "VISION_API_KEY", "vision_api_key", cf, "");

  const double df_score = resolve_double(opts.deepfake_score, "deepfake_score", cf, 0.1);
  built.set.deepfake = std::make_shared<ConstantDeepfakeScorer>(df_score);

  if (opts.mode == "live") {
    built.set.chat = std::make_shared<HttpChatProvider>(chat_cfg);
    built.set.search = std::make_shared<HttpSearchProvider>(search_cfg);
    built.set.reverse_image = std::make_shared<HttpReverseImageProvider>(vision_cfg);
    return built;
  }

  std::optional<std::string> fixtures = opts.fixtures;
  if (!fixtures) fixtures = cf.get("fixtures");
  if (!fixtures)
    throw StoreIOError("mode '" + opts.mode + "' needs --fixtures (or 'fixtures' in the config)");

  if (opts.mode == "replay") {
    built.store = std::make_shared<FixtureStore>(*fixtures, /*create=*/false);
    built.set.chat = std::make_shared<ReplayChatProvider>(built.store);
    built.set.search = std::make_shared<ReplaySearchProvider>(built.store);
    built.set.reverse_image = std::make_shared<ReplayReverseImageProvider>(built.store);
    return built;
  }

  built.store = std::make_shared<FixtureStore>(*fixtures, /*create=*/true);
  built.set.chat = std::make_shared<RecordingChatProvider>(
      std::make_shared<HttpChatProvider>(chat_cfg), built.store);
  built.set.search = std::make_shared<RecordingSearchProvider>(
      std::make_shared<HttpSearchProvider>(search_cfg), built.store);
  built.set.reverse_image = std::make_shared<RecordingReverseImageProvider>(
      std::make_shared<HttpReverseImageProvider>(vision_cfg), built.store);
  return built;
}

bool is_local_ref(const std::string& ref) { return ref.find("://") == std::string::npos; }

void write_text(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StoreIOError("cannot write " + path.string());
  out << content;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string claim;
  std::string post_text;
  std::optional<std::string> image;
  std::optional<std::string> date;
  std::string claim_id = "claim-1";
  std::string out_dir = "out";
  ProviderOptions provider;
};

int run_check(const CheckArgs& args) {
  if (args.image && is_local_ref(*args.image) && !fs::exists(*args.image)) {
    std::cerr << "error: image file not found: " << *args.image << "\n";
    return 2;
  }

  MultimodalClaim claim;
  claim.claim_id = args.claim_id;
  claim.text = args.claim;
  claim.post_text = args.post_text.empty() ? args.claim : args.post_text;
  claim.image_ref = args.image;
  if (args.date) claim.claim_date = util::parse_date(*args.date);

  const ConfigFile cf = load_config(args.provider);
  const auto built = build_providers(args.provider, cf);
  const Orchestrator orchestrator(built.set, build_blocklist(args.provider, cf),
                                  build_workflow_config(args.provider, cf));

  const fs::path out_dir(args.out_dir);
  try {
    const RunResult result = orchestrator.run_claim(claim);
    write_text(out_dir / "trace.jsonl", result.trace.to_jsonl());
    write_text(out_dir / "verdict.json", json(result.explanation).dump(2) + "\n");

    std::cout << "Claim: " << claim.text << "\n";
    std::cout << "Label: " << to_string(result.explanation.label) << " (confidence "
              << result.explanation.confidence << "/5)\n";
    std::cout << "Binary: " << to_string(result.explanation.binary_label) << "\n";
    std::cout << "Termination: " << result.termination_reason << " after "
              << result.chat_calls_used << " chat calls\n";
    if (!result.explanation.key_points.empty()) {
      std::cout << "Key points:\n";
      int i = 0;
      for (const auto& kp : result.explanation.key_points) {
        std::cout << "  " << ++i << ". " << kp.text;
        if (!kp.cited_evidence_ids.empty())
          std::cout << " [evidence: " << util::join(kp.cited_evidence_ids, ", ") << "]";
        std::cout << "\n";
      }
    }
    std::cout << "Wrote " << (out_dir / "verdict.json").string() << " and "
              << (out_dir / "trace.jsonl").string() << "\n";
    return 0;
  } catch (const WorkflowError& e) {
    write_text(out_dir / "trace.jsonl", e.trace().to_jsonl());
    write_text(out_dir / "error.json",
               json{{"error", e.what()}, {"cause", e.cause_kind()}}.dump(2) + "\n");
    std::cerr << "error (" << e.cause_kind() << "): " << e.what() << "\n";
    std::cerr << "partial trace written to " << (out_dir / "trace.jsonl").string() << "\n";
    return 1;
  }
}

// ---------------------------------------------------------------------------
// batch

struct BatchArgs {
  std::string in_path;
  std::string out_path;
  int jobs = 4;
  ProviderOptions provider;
};

json run_one_record(const Orchestrator& orchestrator, const json& line) {
  json out;
  std::string claim_id = line.value("claim_id", "");
  out["claim_id"] = claim_id;
  try {
    MultimodalClaim claim;
    claim.claim_id = claim_id;
    claim.text = line.at("claim_text").get<std::string>();
    claim.post_text = line.value("post_text", claim.text);
    if (claim.post_text.empty()) claim.post_text = claim.text;
    if (line.contains("post_image_url") && !line.at("post_image_url").is_null())
      claim.image_ref = line.at("post_image_url").get<std::string>();
    if (line.contains("fact_check_date") && !line.at("fact_check_date").is_null())
      claim.claim_date = util::parse_date(line.at("fact_check_date").get<std::string>());

    const RunResult result = orchestrator.run_claim(claim);
    out["status"] = "ok";
    out["predicted"] = to_string(result.explanation.label);
    out["binary"] = to_string(result.explanation.binary_label);
    out["confidence"] = result.explanation.confidence;
    out["termination"] = result.termination_reason;
    if (line.contains("gt_evidence_count") && !line.at("gt_evidence_count").is_null())
      out["gt_evidence_count"] = line.at("gt_evidence_count");
  } catch (const WorkflowError& e) {
    out["status"] = "error";
    out["error"] = e.what();
    out["cause"] = e.cause_kind();
  } catch (const std::exception& e) {
    out["status"] = "error";
    out["error"] = e.what();
    out["cause"] = "input_error";
  }
  return out;
}

int run_batch(const BatchArgs& args) {
  std::ifstream in(args.in_path);
  if (!in) {
    std::cerr << "error: cannot read " << args.in_path << "\n";
    return 2;
  }
  std::vector<json> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (util::trim(raw).empty()) continue;
    lines.push_back(json::parse(raw));
  }

  const ConfigFile cf = load_config(args.provider);
  const auto built = build_providers(args.provider, cf);
  const Orchestrator orchestrator(built.set, build_blocklist(args.provider, cf),
                                  build_workflow_config(args.provider, cf));

  std::vector<json> results(lines.size());
  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, args.jobs);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= lines.size()) return;
        results[i] = run_one_record(orchestrator, lines[i]);
      }
    });
  }
  for (auto& worker : workers) worker.join();

  std::ostringstream out;
  int ok = 0;
  int failed = 0;
  for (const auto& result : results) {
    out << result.dump() << "\n";
    (result.at("status") == "ok" ? ok : failed)++;
    std::cerr << result.at("claim_id").get<std::string>() << ": "
              << result.at("status").get<std::string>();
    if (result.contains("predicted"))
      std::cerr << " (" << result.at("predicted").get<std::string>() << ")";
    std::cerr << "\n";
  }
  write_text(args.out_path, out.str());
  std::cout << "wrote " << args.out_path << ": " << ok << " ok, " << failed << " failed\n";
  return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string pred_path;
  std::string gold_path;
  int classes = 3;
  bool buckets = false;
  std::optional<std::string> out_json;
  std::optional<std::string> out_csv;
};

std::map<std::string, json> read_jsonl_by_id(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StoreIOError("cannot read " + path);
  std::map<std::string, json> by_id;
  std::string raw;
  while (std::getline(in, raw)) {
    if (util::trim(raw).empty()) continue;
    json line = json::parse(raw);
    by_id[line.at("claim_id").get<std::string>()] = std::move(line);
  }
  return by_id;
}

json metrics_to_json(const eval::MetricsReport& report) {
  json per_class = json::array();
  for (const auto& c : report.per_class)
    per_class.push_back({{"class", c.class_name},
                         {"precision", c.precision},
                         {"recall", c.recall},
                         {"f1", c.f1},
                         {"support", c.support}});
  return json{{"accuracy", report.accuracy},
              {"precision", report.precision},
              {"recall", report.recall},
              {"f1", report.f1},
              {"per_class", per_class}};
}

int run_eval(const EvalArgs& args) {
  const auto preds = read_jsonl_by_id(args.pred_path);
  const auto golds = read_jsonl_by_id(args.gold_path);

  std::vector<eval::PredictionRecord> records;
  int skipped_error = 0;
  int skipped_nonveracity = 0;
  int skipped_unmatched = 0;
  for (const auto& [claim_id, gold_line] : golds) {
    const auto pit = preds.find(claim_id);
    if (pit == preds.end()) {
      ++skipped_unmatched;
      continue;
    }
    const json& pred_line = pit->second;
    if (pred_line.value("status", "ok") != "ok") {
      ++skipped_error;
      continue;
    }
    const std::string gold_raw = gold_line.contains("label")
                                     ? gold_line.at("label").get<std::string>()
                                     : gold_line.at("gold").get<std::string>();
    eval::PredictionRecord record;
    record.claim_id = claim_id;
    try {
      record.gold = veracity_from_string(gold_raw);
    } catch (const std::invalid_argument&) {
      ++skipped_nonveracity;  // Mixture/Outdated challenge labels
      continue;
    }
    const std::string pred_raw = pred_line.contains("predicted")
                                     ? pred_line.at("predicted").get<std::string>()
                                     : pred_line.at("label").get<std::string>();
    record.predicted = veracity_from_string(pred_raw);
    if (pred_line.contains("confidence") && !pred_line.at("confidence").is_null())
      record.confidence = pred_line.at("confidence").get<int>();
    if (gold_line.contains("gt_evidence_count") && !gold_line.at("gt_evidence_count").is_null())
      record.gt_evidence_count = gold_line.at("gt_evidence_count").get<int>();
    records.push_back(std::move(record));
  }

  if (records.empty()) {
    std::cerr << "error: no scorable records after joining predictions with gold\n";
    return 1;
  }

  const auto setting = args.classes == 2 ? eval::ClassSetting::Binary : eval::ClassSetting::Three;
  const auto weighted = eval::classification_metrics(records, eval::Averaging::Weighted, setting);
  const auto macro = eval::classification_metrics(records, eval::Averaging::Macro, setting);

  json report{{"classes", args.classes},
              {"records", records.size()},
              {"skipped", {{"prediction_error", skipped_error},
                           {"non_veracity_gold", skipped_nonveracity},
                           {"missing_prediction", skipped_unmatched}}},
              {"weighted", metrics_to_json(weighted)},
              {"macro", metrics_to_json(macro)}};

  if (args.buckets) {
    const auto buckets = eval::difficulty_buckets(records);
    json rows = json::array();
    for (const auto& bucket : buckets.buckets)
      rows.push_back({{"bucket", bucket.bucket},
                      {"count", bucket.count},
                      {"macro_f1_three", bucket.macro_f1_three},
                      {"macro_f1_binary", bucket.macro_f1_binary}});
    report["difficulty_buckets"] = rows;
    report["bucket_footnote_missing_count"] = buckets.missing_count;
  }

  std::cout << report.dump(2) << "\n";
  if (args.out_json) write_text(*args.out_json, report.dump(2) + "\n");
  if (args.out_csv) {
    std::ostringstream csv;
    csv << "averaging,f1,accuracy,recall,precision\n";
    csv << "weighted," << weighted.f1 << "," << weighted.accuracy << "," << weighted.recall
        << "," << weighted.precision << "\n";
    csv << "macro," << macro.f1 << "," << macro.accuracy << "," << macro.recall << ","
        << macro.precision << "\n";
    write_text(*args.out_csv, csv.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// build-corpus

struct BuildCorpusArgs {
  std::string in_dir;
  std::string out_path;
  std::uint64_t seed = 7;
  ProviderOptions provider;
};

int run_build_corpus(const BuildCorpusArgs& args) {
  const fs::path in_dir(args.in_dir);
  if (!fs::is_directory(in_dir)) {
    std::cerr << "error: not a directory: " << args.in_dir << "\n";
    return 2;
  }

  const ConfigFile cf = load_config(args.provider);
  const auto built = build_providers(args.provider, cf);
  AgentConfig agent_cfg;
  agent_cfg.retry_budget = resolve_int(args.provider.retry_budget, "retry_budget", cf,
                                       agent_cfg.retry_budget);
  const AgentRuntime agents(built.set.chat, agent_cfg);

  std::vector<fs::path> meta_files;
  for (const auto& entry : fs::directory_iterator(in_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      meta_files.push_back(entry.path());
  std::sort(meta_files.begin(), meta_files.end());

  std::vector<corpus::DatasetRecord> records;
  std::ostringstream rejections;
  rejections << "article_id,reason\n";
  int rejected = 0;

  for (const auto& meta_path : meta_files) {
    std::ifstream meta_in(meta_path);
    json meta_json = json::parse(meta_in);
    ArticleMeta meta;
    meta.article_id = meta_json.value("article_id", meta_path.stem().string());
    meta.article_url = meta_json.value("url", "");
    meta.category = meta_json.value("category", "");
    meta.headline = meta_json.value("headline", "");
    meta.claim = meta_json.value("claim", "");
    meta.raw_label = meta_json.value("label", "");
    if (meta_json.contains("date") && !meta_json.at("date").is_null())
      meta.date = util::parse_date(meta_json.at("date").get<std::string>());

    const fs::path html_path = meta_path.parent_path() / (meta_path.stem().string() + ".html");

    // Optional sidecar map from image URL to a file relative to the corpus dir.
    std::map<std::string, std::string> image_files;
    if (meta_json.contains("image_files"))
      for (const auto& [url, rel] : meta_json.at("image_files").items())
        image_files[url] = (in_dir / rel.get<std::string>()).string();
    const corpus::ImageResolver resolver =
        [&image_files](const std::string& url) -> std::optional<std::string> {
      const auto it = image_files.find(url);
      if (it == image_files.end() || !fs::exists(it->second)) return std::nullopt;
      return it->second;
    };

    try {
      std::ifstream html_in(html_path, std::ios::binary);
      if (!html_in) throw StoreIOError("missing html file: " + html_path.string());
      std::ostringstream html;
      html << html_in.rdbuf();
      const TaggedArticle article = reformat_article(html.str(), meta);
      const auto outcome = corpus::build_record(article, agents, resolver);
      if (outcome.record) {
        records.push_back(*outcome.record);
        std::cerr << meta.article_id << ": kept";
        if (!outcome.dropped_images.empty())
          std::cerr << " (" << outcome.dropped_images.size() << " undersized image(s) dropped)";
        std::cerr << "\n";
      } else {
        ++rejected;
        for (const auto& reason : outcome.rejections)
          rejections << meta.article_id << "," << reason << "\n";
        std::cerr << meta.article_id << ": rejected ("
                  << util::join(outcome.rejections, "; ") << ")\n";
      }
    } catch (const Error& e) {
      ++rejected;
      rejections << meta.article_id << ",processing_error: " << e.what() << "\n";
      std::cerr << meta.article_id << ": error (" << e.what() << ")\n";
    }
  }

  std::ostringstream all;
  for (const auto& record : records) all << json(record).dump() << "\n";
  write_text(args.out_path, all.str());
  write_text(args.out_path + ".rejections.csv", rejections.str());

  const auto split = corpus::split_dataset(records, args.seed);
  const auto write_split = [&](const char* name, const std::vector<corpus::DatasetRecord>& part) {
    std::ostringstream body;
    for (const auto& record : part) body << json(record).dump() << "\n";
    write_text(args.out_path + "." + name + ".jsonl", body.str());
  };
  write_split("dev", split.dev);
  write_split("test", split.test);
  write_split("challenge", split.challenge);

  std::cout << "kept " << records.size() << ", rejected " << rejected << "; splits: dev "
            << split.dev.size() << " / test " << split.test.size() << " / challenge "
            << split.challenge.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// replay verify

int run_replay_verify(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: not a directory: " << dir << "\n";
    return 2;
  }
  const FixtureStore store(dir, /*create=*/false);
  const auto keys = store.keys();
  const auto problems = store.verify();
  for (const auto& problem : problems) std::cerr << problem << "\n";
  std::cout << keys.size() << " fixtures, " << problems.size() << " problems\n";
  return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agent-based multimodal fact checking pipeline"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Fact-check one claim");
  check->add_option("--claim", check_args.claim, "Claim text")->required();
  check->add_option("--post", check_args.post_text, "Post text the claim appeared in");
  check->add_option("--image", check_args.image, "Post image (local path or URL)");
  check->add_option("--date", check_args.date, "Claim date YYYY-MM-DD (leakage cutoff)");
  check->add_option("--claim-id", check_args.claim_id, "Claim identifier")
      ->capture_default_str();
  check->add_option("--out", check_args.out_dir, "Output directory")->capture_default_str();
  add_provider_options(check, check_args.provider);

  BatchArgs batch_args;
  auto* batch = app.add_subcommand("batch", "Fact-check a dataset JSONL");
  batch->add_option("--in", batch_args.in_path, "Dataset JSONL")->required();
  batch->add_option("--out", batch_args.out_path, "Predictions JSONL")->required();
  batch->add_option("--jobs", batch_args.jobs, "Concurrent claims")->capture_default_str();
  add_provider_options(batch, batch_args.provider);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against gold labels");
  eval_cmd->add_option("--pred", eval_args.pred_path, "Predictions JSONL")->required();
  eval_cmd->add_option("--gold", eval_args.gold_path, "Gold JSONL (dataset records)")
      ->required();
  eval_cmd->add_option("--classes", eval_args.classes, "2 for binary, 3 for three-class")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  eval_cmd->add_flag("--buckets", eval_args.buckets, "Report difficulty buckets");
  eval_cmd->add_option("--out", eval_args.out_json, "Write the JSON report here");
  eval_cmd->add_option("--csv", eval_args.out_csv, "Write the metrics table CSV here");

  BuildCorpusArgs corpus_args;
  auto* corpus_cmd = app.add_subcommand("build-corpus", "Build the dataset from HTML articles");
  corpus_cmd->add_option("--in", corpus_args.in_dir, "Directory of {stem.json, stem.html} pairs")
      ->required();
  corpus_cmd->add_option("--out", corpus_args.out_path, "Dataset JSONL output path")->required();
  corpus_cmd->add_option("--seed", corpus_args.seed, "Split shuffle seed")
      ->capture_default_str();
  add_provider_options(corpus_cmd, corpus_args.provider);

  auto* replay = app.add_subcommand("replay", "Fixture store utilities");
  replay->require_subcommand(1);
  std::string verify_dir;
  auto* verify = replay->add_subcommand("verify", "Check fixture integrity");
  verify->add_option("--fixtures", verify_dir, "Fixture directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_args);
    if (batch->parsed()) return run_batch(batch_args);
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (corpus_cmd->parsed()) return run_build_corpus(corpus_args);
    if (replay->parsed() && verify->parsed()) return run_replay_verify(verify_dir);
  } catch (const ReplayMiss& e) {
    std::cerr << "replay miss: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
