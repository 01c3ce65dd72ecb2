#include "wdaug/pipeline.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "manifest_support.hpp"
#include "wdaug/balance.hpp"
#include "wdaug/classify.hpp"
#include "wdaug/corpus_io.hpp"
#include "wdaug/eda.hpp"
#include "wdaug/embedding.hpp"
#include "wdaug/error.hpp"
#include "wdaug/lexicon.hpp"
#include "wdaug/llm.hpp"
#include "wdaug/log.hpp"
#include "wdaug/postag.hpp"
#include "wdaug/similarity.hpp"
#include "wdaug/translate.hpp"

namespace wdaug::pipeline {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> class_names() {
  std::vector<std::string> names;
  for (const auto label : kLabels) {
    names.emplace_back(label_code(label));
  }
  return names;
}

void require_input(const RunConfig& config) {
  if (config.input.empty()) {
    throw UsageError("no input corpus given (paths.input in the config or --input)");
  }
  if (!fs::exists(config.input)) {
    throw UsageError("missing input file: " + config.input.string());
  }
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BalancePlan load_plan(const RunConfig& config, const std::string& hint) {
  const fs::path path = config.out / "plan.json";
  if (!fs::exists(path)) {
    throw UsageError("missing " + path.string() + "; " + hint);
  }
  return plan_from_json(slurp(path));
}

void write_text_atomic(const std::string& text, const fs::path& path) {
  const fs::path tmp = path.string() + ".tmp";
  try {
    std::ofstream out(tmp);
    if (!out) {
      throw UsageError("cannot write " + tmp.string());
    }
    out << text;
    if (!out.flush()) {
      throw UsageError("failed writing " + tmp.string());
    }
    out.close();
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

void write_corpus_atomic(const LabeledCorpus& corpus, const fs::path& path) {
  const fs::path tmp = path.string() + ".tmp";
  try {
    write_corpus(corpus, tmp);
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

ordered_json per_class_json(const LabeledCorpus& corpus) {
  ordered_json j;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    j[std::string(label_code(kLabels[c]))] = corpus.class_counts()[c];
  }
  return j;
}

std::vector<long long> original_counts(const LabeledCorpus& corpus) {
  std::array<long long, kNumLabels> counts{};
  std::size_t skipped = 0;
  for (const auto& doc : corpus.documents()) {
    if (doc.source == Source::Original) {
      ++counts[static_cast<std::size_t>(doc.label)];
    } else {
      ++skipped;
    }
  }
  if (skipped > 0) {
    log::warn(std::to_string(skipped) + " non-original record(s) ignored for planning");
  }
  return {counts.begin(), counts.end()};
}

struct AugmenterBundle {
  std::unique_ptr<Augmenter> augmenter;
  std::function<std::size_t()> provider_calls = [] { return std::size_t{0}; };
  std::size_t parallelism = 1;
};

AugmenterBundle make_augmenter(const RunConfig& config) {
  AugmenterBundle bundle;
  bundle.parallelism = std::max(1u, config.parallelism);
  if (config.method == "eda") {
    SynonymLexicon lexicon;
    if (!config.lexicon.empty()) {
      lexicon = SynonymLexicon::load(config.lexicon);
    } else {
      log::warn(
          "no synonym lexicon configured (paths.lexicon); synonym replacement and insertion "
          "degenerate to identity");
    }
    bundle.augmenter = std::make_unique<eda::EdaAugmenter>(std::move(lexicon), config.eda_alpha);
  } else if (config.method == "bt") {
    bt::RemoteBtOptions options;
    options.endpoint = config.bt_endpoint;
    options.max_retries = config.bt_max_retries;
    options.timeout_s = config.bt_timeout_s;
    auto provider = std::make_shared<bt::RemoteProvider>(options);
    bundle.provider_calls = [provider] { return provider->calls(); };
    bundle.augmenter = std::make_unique<bt::BtAugmenter>(std::move(provider), config.bt_pivot);
  } else {
    llm::HttpClientOptions options;
    options.base_url = config.llm_base_url;
    options.api =
        config.llm_api == "chat" ? llm::ApiKind::Chat : llm::ApiKind::LegacyCompletions;
    options.rate_limit_per_s = config.llm_rate_limit_per_s;
    auto client = std::make_shared<llm::HttpChatClient>(options);
    llm::GenParams params;
    params.model = config.llm_model;
    params.temperature = config.llm_temperature;
    params.max_tokens = config.llm_max_tokens;
    params.max_retries = config.llm_max_retries;
    std::shared_ptr<const llm::PromptTemplate> tmpl;
    if (!config.exemplars.empty()) {
      tmpl = std::make_shared<const llm::PromptTemplate>(llm::PromptTemplate::load(config.exemplars));
    }
    bundle.provider_calls = [client] { return client->calls(); };
    bundle.augmenter = std::make_unique<llm::LlmAugmenter>(std::move(client), params, tmpl);
    bundle.parallelism = std::max(1u, config.llm_concurrency);
  }
  return bundle;
}

}  // namespace

void run_plan(const RunConfig& config) {
  require_input(config);
  const auto corpus = load_corpus(config.input);
  const auto counts = original_counts(corpus);
  const BalancePlan plan =
      config.per_class_test > 0
          ? compute_plan_with_test(class_names(), counts, config.per_class_test)
          : compute_plan(class_names(), counts);
  fs::create_directories(config.out);
  std::string plan_json = plan_to_json(plan);
  if (plan_json.empty() || plan_json.back() != '\n') plan_json += '\n';
  write_text_atomic(plan_json, config.out / "plan.json");
  std::cout << render_plan_table(plan);

  ordered_json stage;
  stage["mode"] = plan.mode == BalancePlan::Mode::Derived ? "derived" : "explicit";
  stage["counts"] = {{"input", corpus.size()},
                     {"per_class", per_class_json(corpus)},
                     {"test_per_class", plan.test_per_class},
                     {"target_per_class", plan.target_per_class},
                     {"train_total", plan.train_total()}};
  manifest::update_stage(config, "plan", stage);
}

void run_split(const RunConfig& config) {
  require_input(config);
  const auto corpus = load_corpus(config.input);
  long long per_class = config.per_class_test;
  if (per_class <= 0) {
    per_class =
        load_plan(config, "run `wdaug plan` first or pass --per-class-test").test_per_class;
  }
  const auto split = stratified_split(corpus, static_cast<std::size_t>(per_class), config.seed);
  fs::create_directories(config.out);
  write_corpus_atomic(split.train, config.out / "train.jsonl");
  write_corpus_atomic(split.test, config.out / "test.jsonl");
  std::cout << "train: " << split.train.size() << " records, test: " << split.test.size()
            << " records (" << per_class << " per class)\n";

  ordered_json stage;
  stage["counts"] = {{"input", corpus.size()},
                     {"train", split.train.size()},
                     {"test", split.test.size()},
                     {"train_per_class", per_class_json(split.train)},
                     {"test_per_class", per_class_json(split.test)}};
  manifest::update_stage(config, "split", stage);
}

void run_augment(const RunConfig& config, bool force) {
  const auto plan = load_plan(config, "run `wdaug plan` first");
  const fs::path train_path = config.out / "train.jsonl";
  if (!fs::exists(train_path)) {
    throw UsageError("missing " + train_path.string() + "; run `wdaug split` first");
  }
  const auto train = load_corpus(train_path);
  const fs::path out_path = config.out / "train_balanced.jsonl";
  if (fs::exists(out_path) && !force) {
    throw UsageError(out_path.string() + " already exists; pass --force to regenerate");
  }
  auto bundle = make_augmenter(config);
  const auto balanced = apply_plan(train, plan, *bundle.augmenter, config.seed,
                                   bundle.parallelism);
  write_corpus_atomic(balanced, out_path);
  const std::size_t generated = balanced.size() - train.size();
  std::cout << "generated " << generated << " records with " << config.method
            << "; balanced training set: " << balanced.size() << " records ("
            << plan.target_per_class << " per class)\n";

  ordered_json stage;
  stage["method"] = config.method;
  stage["counts"] = {{"train", train.size()},
                     {"generated", generated},
                     {"balanced", balanced.size()},
                     {"balanced_per_class", per_class_json(balanced)}};
  stage["provider_calls"] = bundle.provider_calls();
  manifest::update_stage(config, "augment", stage);
}

void run_similarity(const RunConfig& config) {
  const fs::path balanced_path = config.out / "train_balanced.jsonl";
  if (!fs::exists(balanced_path)) {
    throw UsageError("missing " + balanced_path.string() + "; run `wdaug augment` first");
  }
  const auto corpus = load_corpus(balanced_path);
  const auto pairs = sim::make_pairs(corpus);

  std::vector<sim::NamedProvider> providers;
  providers.push_back({"builtin", std::make_shared<embed::BuiltinEmbedder>()});
  if (!config.embed_models.empty()) {
    if (config.embed_base_url.empty()) {
      throw UsageError("embed.models configured without embed.base_url");
    }
    for (const auto& model : config.embed_models) {
      embed::RemoteEmbedOptions options;
      options.endpoint = config.embed_base_url;
      options.model = model;
      options.max_retries = config.embed_max_retries;
      providers.push_back({model, std::make_shared<embed::RemoteEmbedder>(options)});
    }
  }
  pos::BuiltinPosTagger tagger;
  const auto report =
      sim::similarity_report(pairs, providers, tagger, std::max(1u, config.parallelism));
  fs::create_directories(config.out);
  sim::write_report_csv(report, config.out / "similarity.csv");
  sim::write_report_summary(report, config.out / "similarity_summary.json");
  std::cout << sim::render_report(report);

  ordered_json stage;
  stage["counts"] = {{"pairs", pairs.size()}, {"rows", report.rows.size()}};
  stage["providers"] = report.provider_names;
  std::size_t remote_calls = 0;
  for (std::size_t p = 1; p < providers.size(); ++p) {
    if (const auto* remote = dynamic_cast<embed::RemoteEmbedder*>(providers[p].provider.get())) {
      remote_calls += remote->calls();
    }
  }
  stage["provider_calls"] = remote_calls;
  manifest::update_stage(config, "similarity", stage);
}

namespace {

struct EvalOutcome {
  std::string type;
  fs::path path;
  std::optional<double> val_accuracy;
  std::size_t train_docs = 0;
  std::size_t val_docs = 0;
  clf::EvalReport report;
};

std::string balanced_type_name(const LabeledCorpus& corpus) {
  std::set<std::string> methods;
  for (const auto& doc : corpus.documents()) {
    if (doc.source != Source::Original) {
      methods.emplace(source_name(doc.source));
    }
  }
  if (methods.size() == 1) return *methods.begin();
  return "balanced";
}

EvalOutcome evaluate_train_set(const RunConfig& config, const std::string& type,
                               const fs::path& path, const LabeledCorpus& test,
                               unsigned parallelism) {
  const auto corpus = load_corpus(path);
  if (corpus.empty()) {
    throw UsageError("train set " + path.string() + " is empty");
  }
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (test.class_counts()[c] > 0 && corpus.class_counts()[c] == 0) {
      throw UsageError("train set '" + (type.empty() ? path.string() : type) + "' has no " +
                       std::string(label_code(kLabels[c])) +
                       " records but the test set does (label sets must match)");
    }
  }
  EvalOutcome outcome;
  outcome.type = type.empty() ? balanced_type_name(corpus) : type;
  outcome.path = path;

  LabeledCorpus fit = corpus;
  if (config.validation_fraction > 0.0) {
    const auto vsplit = fraction_split(corpus, config.validation_fraction,
                                       config.stratified_validation, config.seed);
    if (!vsplit.test.empty()) {
      fit = vsplit.train;
      const auto model = clf::BowModel::train(fit);
      outcome.val_accuracy =
          clf::metrics(clf::evaluate(model, vsplit.test, parallelism)).accuracy;
      outcome.val_docs = vsplit.test.size();
      outcome.train_docs = fit.size();
      outcome.report = clf::metrics(clf::evaluate(model, test, parallelism));
      return outcome;
    }
    log::warn("validation fraction " + std::to_string(config.validation_fraction) +
              " carves zero records at this corpus size; skipping Val-A");
  }
  const auto model = clf::BowModel::train(fit);
  outcome.train_docs = fit.size();
  outcome.report = clf::metrics(clf::evaluate(model, test, parallelism));
  return outcome;
}

}  // namespace

void run_evaluate(const RunConfig& config, const EvaluateOptions& options) {
  const fs::path test_path = options.test.empty() ? config.out / "test.jsonl" : options.test;
  if (!fs::exists(test_path)) {
    throw UsageError("missing " + test_path.string() + "; run `wdaug split` first or pass --test");
  }
  const auto test = load_corpus(test_path);
  if (test.empty()) {
    throw UsageError("test set " + test_path.string() + " is empty");
  }

  std::vector<TrainSpec> trains = options.trains;
  if (trains.empty()) {
    const fs::path original = config.out / "train.jsonl";
    if (!fs::exists(original)) {
      throw UsageError("missing " + original.string() +
                       "; run `wdaug split` first or pass --train");
    }
    trains.push_back({"original", original});
    const fs::path balanced = config.out / "train_balanced.jsonl";
    if (fs::exists(balanced)) {
      trains.push_back({"", balanced});  // type named after its method on load
    }
  }

  const unsigned parallelism = std::max(1u, config.parallelism);
  std::vector<EvalOutcome> outcomes;
  for (const auto& spec : trains) {
    if (!fs::exists(spec.path)) {
      throw UsageError("missing train file: " + spec.path.string());
    }
    outcomes.push_back(evaluate_train_set(config, spec.type, spec.path, test, parallelism));
  }
  if (!options.predictions.empty()) {
    const auto cm = clf::import_external_predictions(options.predictions, test);
    EvalOutcome outcome;
    outcome.type = options.predictions_type;
    outcome.path = options.predictions;
    outcome.report = clf::metrics(cm);
    outcomes.push_back(std::move(outcome));
  }

  std::vector<clf::OverallRow> rows;
  for (const auto& o : outcomes) {
    clf::OverallRow row;
    row.type = o.type;
    row.val_accuracy = o.val_accuracy;
    row.t_p = o.report.macro_precision;
    row.t_r = o.report.macro_recall;
    row.t_f = o.report.macro_f1;
    row.t_a = o.report.accuracy;
    row.t_mcc = o.report.mcc;
    rows.push_back(std::move(row));
  }
  std::cout << "Overall (T-P/T-R/T-F are macro averages; weighted variants in eval.json)\n"
            << clf::render_overall_table(rows);
  if (outcomes.size() >= 2) {
    std::vector<clf::ClassTableEntry> entries;
    for (const auto& o : outcomes) {
      entries.push_back({o.type, o.report.per_class});
    }
    std::cout << "\nClass-wise (INS relative to '" << outcomes.front().type << "')\n"
              << clf::render_class_table(entries);
  }

  ordered_json j;
  j["test"] = {{"path", test_path.string()},
               {"total", test.size()},
               {"per_class", per_class_json(test)}};
  j["validation"] = {{"fraction", config.validation_fraction},
                     {"stratified", config.stratified_validation}};
  auto& evals = j["evaluations"];
  evals = ordered_json::array();
  for (const auto& o : outcomes) {
    ordered_json e;
    e["type"] = o.type;
    e["train_path"] = o.path.string();
    e["train_docs"] = o.train_docs;
    e["val_docs"] = o.val_docs;
    if (o.val_accuracy) {
      e["val_accuracy"] = *o.val_accuracy;
    } else {
      e["val_accuracy"] = nullptr;
    }
    e["accuracy"] = o.report.accuracy;
    e["mcc"] = o.report.mcc;
    e["macro"] = {{"precision", o.report.macro_precision},
                  {"recall", o.report.macro_recall},
                  {"f1", o.report.macro_f1}};
    e["weighted"] = {{"precision", o.report.weighted_precision},
                     {"recall", o.report.weighted_recall},
                     {"f1", o.report.weighted_f1}};
    ordered_json per_class;
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      const auto& m = o.report.per_class[c];
      per_class[std::string(label_code(kLabels[c]))] = {{"precision", m.precision},
                                                        {"recall", m.recall},
                                                        {"f1", m.f1},
                                                        {"ns", m.ns},
                                                        {"support", m.support}};
    }
    e["per_class"] = std::move(per_class);
    evals.push_back(std::move(e));
  }
  fs::create_directories(config.out);
  write_text_atomic(j.dump(2) + "\n", config.out / "eval.json");

  ordered_json stage;
  ordered_json types = ordered_json::array();
  for (const auto& o : outcomes) types.push_back(o.type);
  stage["types"] = std::move(types);
  stage["counts"] = {{"test", test.size()}, {"evaluations", outcomes.size()}};
  manifest::update_stage(config, "evaluate", stage);
}

void run_report(const RunConfig& config) {
  const fs::path plan_path = config.out / "plan.json";
  const fs::path sim_path = config.out / "similarity_summary.json";
  const fs::path eval_path = config.out / "eval.json";
  bool any = false;
  std::string text;
  std::string figures = "series,method,kind,metric,value\n";
  char line[256];

  if (fs::exists(plan_path)) {
    any = true;
    const auto plan = plan_from_json(slurp(plan_path));
    text += "== Balance plan ==\n";
    text += render_plan_table(plan);
    text += "\n";
  }
  if (fs::exists(sim_path)) {
    any = true;
    ordered_json j;
    try {
      j = ordered_json::parse(slurp(sim_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(sim_path.string() + ": " + e.what());
    }
    text += "== Similarity means ==\n";
    for (const auto& m : j["means"]) {
      const std::string method = m.value("method", "?");
      const std::string kind = m.value("kind", "?");
      std::snprintf(line, sizeof(line), "%s/%s (%llu pairs)\n", method.c_str(), kind.c_str(),
                    static_cast<unsigned long long>(m.value("pairs", 0ULL)));
      text += line;
      std::snprintf(line, sizeof(line),
                    "  ROUGE-1 %.4f  ROUGE-2 %.4f  ROUGE-L %.4f  POS overlap %.4f\n",
                    m.value("rouge1_f1", 0.0), m.value("rouge2_f1", 0.0),
                    m.value("rougeL_f1", 0.0), m.value("pos_overlap", 0.0));
      text += line;
      const char* metrics[] = {"rouge1_f1", "rouge2_f1", "rougeL_f1", "pos_overlap"};
      for (const char* metric : metrics) {
        std::snprintf(line, sizeof(line), "similarity,%s,%s,%s,%.6f\n", method.c_str(),
                      kind.c_str(), metric, m.value(metric, 0.0));
        figures += line;
      }
      if (m.contains("cosine") && m.at("cosine").is_object()) {
        for (const auto& [provider, value] : m.at("cosine").items()) {
          if (value.is_null()) continue;
          std::snprintf(line, sizeof(line), "  cosine[%s] %.4f\n", provider.c_str(),
                        value.get<double>());
          text += line;
          std::snprintf(line, sizeof(line), "similarity,%s,%s,cosine_%s,%.6f\n", method.c_str(),
                        kind.c_str(), provider.c_str(), value.get<double>());
          figures += line;
        }
      }
    }
    text += "\n";
  }
  if (fs::exists(eval_path)) {
    any = true;
    ordered_json j;
    try {
      j = ordered_json::parse(slurp(eval_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(eval_path.string() + ": " + e.what());
    }
    text += "== Classification ==\n";
    std::vector<clf::OverallRow> rows;
    std::vector<clf::ClassTableEntry> entries;
    for (const auto& e : j["evaluations"]) {
      clf::OverallRow row;
      row.type = e.value("type", "?");
      if (e.contains("val_accuracy") && !e.at("val_accuracy").is_null()) {
        row.val_accuracy = e.at("val_accuracy").get<double>();
      }
      const ordered_json macro = e.value("macro", ordered_json::object());
      row.t_p = macro.value("precision", 0.0);
      row.t_r = macro.value("recall", 0.0);
      row.t_f = macro.value("f1", 0.0);
      row.t_a = e.value("accuracy", 0.0);
      row.t_mcc = e.value("mcc", 0.0);
      rows.push_back(row);

      clf::ClassTableEntry entry;
      entry.type = row.type;
      const ordered_json per_class = e.value("per_class", ordered_json::object());
      for (const auto label : kLabels) {
        const ordered_json pc =
            per_class.value(std::string(label_code(label)), ordered_json::object());
        clf::ClassMetrics m;
        m.precision = pc.value("precision", 0.0);
        m.recall = pc.value("recall", 0.0);
        m.f1 = pc.value("f1", 0.0);
        m.ns = pc.value("ns", 0ULL);
        m.support = pc.value("support", 0ULL);
        entry.per_class.push_back(m);
      }
      entries.push_back(std::move(entry));

      std::snprintf(line, sizeof(line), "classification,%s,overall,macro_f1,%.6f\n",
                    row.type.c_str(), row.t_f);
      figures += line;
      std::snprintf(line, sizeof(line), "classification,%s,overall,accuracy,%.6f\n",
                    row.type.c_str(), row.t_a);
      figures += line;
      std::snprintf(line, sizeof(line), "classification,%s,overall,mcc,%.6f\n", row.type.c_str(),
                    row.t_mcc);
      figures += line;
    }
    text += clf::render_overall_table(rows);
    if (entries.size() >= 2) {
      text += "\n";
      text += clf::render_class_table(entries);
    }
  }
  if (!any) {
    throw UsageError("nothing to report under " + config.out.string() +
                     "; run plan/similarity/evaluate first");
  }
  fs::create_directories(config.out);
  write_text_atomic(text, config.out / "report.txt");
  write_text_atomic(figures, config.out / "figures.csv");
  std::cout << "wrote " << (config.out / "report.txt").string() << " and "
            << (config.out / "figures.csv").string() << "\n";

  ordered_json stage;
  stage["inputs"] = {{"plan", fs::exists(plan_path)},
                     {"similarity", fs::exists(sim_path)},
                     {"eval", fs::exists(eval_path)}};
  manifest::update_stage(config, "report", stage);
}

}  // namespace wdaug::pipeline
