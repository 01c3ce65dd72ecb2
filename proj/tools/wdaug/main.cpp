#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdaug/config.hpp"
#include "wdaug/error.hpp"
#include "wdaug/log.hpp"
#include "wdaug/pipeline.hpp"
#include "wdaug/version.hpp"

namespace {

namespace fs = std::filesystem;

// One value set shared by every subcommand; only the parsed subcommand's
// options are consulted (via count()) when building the effective config.
struct Flags {
  std::string config_path;
  std::string input;
  std::string out;
  std::string lexicon;
  std::string exemplars;
  long long per_class_test = 0;
  double validation_fraction = 0.2;
  std::uint64_t seed = 42;
  std::string method;
  unsigned parallelism = 1;
  double eda_alpha = 0.1;
  int eda_naug = 1;
  std::string bt_endpoint;
  std::string bt_pivot;
  std::string llm_base_url;
  std::string llm_api;
  std::string llm_model;
  double llm_temperature = 0.7;
  unsigned llm_concurrency = 1;
  std::string embed_base_url;
  std::vector<std::string> embed_models;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--input", f.input, "corpus JSONL (overrides paths.input)");
  cmd->add_option("--out", f.out, "artifact directory (overrides paths.out)");
  cmd->add_option("--seed", f.seed, "PRNG seed (overrides split.seed)");
  cmd->add_option("--per-class-test", f.per_class_test,
                  "explicit per-class test carve-out (0 = derive from the plan rule)");
  cmd->add_option("--validation-fraction", f.validation_fraction,
                  "fraction of each train set carved for Val-A");
  cmd->add_option("--lexicon", f.lexicon, "synonym lexicon JSON for EDA");
  cmd->add_option("--exemplars", f.exemplars, "five text-explanation exemplar pairs (JSON) for LLM");
  cmd->add_option("--method", f.method, "augmentation method")
      ->check(CLI::IsMember({"eda", "bt", "llm"}));
  cmd->add_option("--parallelism", f.parallelism, "worker threads for eda/bt/similarity/evaluate");
  cmd->add_option("--eda-alpha", f.eda_alpha, "EDA per-operation intensity");
  cmd->add_option("--eda-naug", f.eda_naug, "EDA variants per eda_augment call");
  cmd->add_option("--bt-endpoint", f.bt_endpoint, "translation endpoint URL");
  cmd->add_option("--bt-pivot", f.bt_pivot, "back-translation pivot language code");
  cmd->add_option("--llm-base-url", f.llm_base_url, "completion endpoint base URL");
  cmd->add_option("--llm-api", f.llm_api, "completion wire flavor")
      ->check(CLI::IsMember({"chat", "completions"}));
  cmd->add_option("--llm-model", f.llm_model, "completion model name");
  cmd->add_option("--llm-temperature", f.llm_temperature, "sampling temperature");
  cmd->add_option("--llm-concurrency", f.llm_concurrency, "parallel in-flight completions");
  cmd->add_option("--embed-base-url", f.embed_base_url, "embeddings endpoint base URL");
  cmd->add_option("--embed-model", f.embed_models,
                  "remote embedding model name (repeatable)");
  cmd->add_flag("--quiet", f.quiet, "suppress warnings and notices");
}

wdaug::RunConfig build_config(CLI::App* cmd, const Flags& f) {
  wdaug::ConfigOverrides ov;
  if (cmd->count("--input")) ov.input = f.input;
  if (cmd->count("--out")) ov.out = f.out;
  if (cmd->count("--lexicon")) ov.lexicon = f.lexicon;
  if (cmd->count("--exemplars")) ov.exemplars = f.exemplars;
  if (cmd->count("--per-class-test")) ov.per_class_test = f.per_class_test;
  if (cmd->count("--validation-fraction")) ov.validation_fraction = f.validation_fraction;
  if (cmd->count("--seed")) ov.seed = f.seed;
  if (cmd->count("--method")) ov.method = f.method;
  if (cmd->count("--parallelism")) ov.parallelism = f.parallelism;
  if (cmd->count("--eda-alpha")) ov.eda_alpha = f.eda_alpha;
  if (cmd->count("--eda-naug")) ov.eda_naug = f.eda_naug;
  if (cmd->count("--bt-endpoint")) ov.bt_endpoint = f.bt_endpoint;
  if (cmd->count("--bt-pivot")) ov.bt_pivot = f.bt_pivot;
  if (cmd->count("--llm-base-url")) ov.llm_base_url = f.llm_base_url;
  if (cmd->count("--llm-api")) ov.llm_api = f.llm_api;
  if (cmd->count("--llm-model")) ov.llm_model = f.llm_model;
  if (cmd->count("--llm-temperature")) ov.llm_temperature = f.llm_temperature;
  if (cmd->count("--llm-concurrency")) ov.llm_concurrency = f.llm_concurrency;
  if (cmd->count("--embed-base-url")) ov.embed_base_url = f.embed_base_url;
  if (cmd->count("--embed-model")) ov.embed_models = f.embed_models;
  std::optional<fs::path> config_path;
  if (cmd->count("--config")) config_path = f.config_path;
  return wdaug::make_config(config_path, ov);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus balancing, augmentation and evaluation toolkit"};
  app.set_version_flag("--version", std::string(wdaug::kToolName) + " " + wdaug::kVersion);
  app.require_subcommand(1);

  Flags flags;
  CLI::App* plan =
      app.add_subcommand("plan", "compute per-class augmentation counts; writes plan.json");
  add_common(plan, flags);
  CLI::App* split =
      app.add_subcommand("split", "carve the test set; writes train.jsonl and test.jsonl");
  add_common(split, flags);
  CLI::App* augment = app.add_subcommand(
      "augment", "fill every class to the plan target; writes train_balanced.jsonl");
  add_common(augment, flags);
  bool force = false;
  augment->add_flag("--force", force, "overwrite an existing train_balanced.jsonl");
  CLI::App* similarity = app.add_subcommand(
      "similarity", "score augmented records against their parents; writes similarity.csv");
  add_common(similarity, flags);
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "train and score the builtin classifier per train set; writes eval.json");
  add_common(evaluate, flags);
  std::vector<std::string> train_specs;
  std::string test_path;
  std::string predictions_path;
  std::string predictions_type = "external";
  evaluate->add_option("--train", train_specs,
                       "train set, as a path or name=path (repeatable; default: train.jsonl and "
                       "train_balanced.jsonl under --out)");
  evaluate->add_option("--test", test_path, "test set path (default: test.jsonl under --out)");
  evaluate->add_option("--predictions", predictions_path,
                       "external predictions JSONL ({\"id\", \"label\"}) scored against the test set");
  evaluate->add_option("--predictions-type", predictions_type,
                       "row label for the external predictions");
  CLI::App* report = app.add_subcommand(
      "report", "merge plan/similarity/eval artifacts into report.txt and figures.csv");
  add_common(report, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  wdaug::log::quiet() = flags.quiet;
  try {
    if (app.got_subcommand(plan)) {
      wdaug::pipeline::run_plan(build_config(plan, flags));
    } else if (app.got_subcommand(split)) {
      wdaug::pipeline::run_split(build_config(split, flags));
    } else if (app.got_subcommand(augment)) {
      wdaug::pipeline::run_augment(build_config(augment, flags), force);
    } else if (app.got_subcommand(similarity)) {
      wdaug::pipeline::run_similarity(build_config(similarity, flags));
    } else if (app.got_subcommand(evaluate)) {
      wdaug::pipeline::EvaluateOptions options;
      for (const auto& spec : train_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
          options.trains.push_back({fs::path(spec).stem().string(), spec});
        } else {
          options.trains.push_back({spec.substr(0, eq), spec.substr(eq + 1)});
        }
      }
      if (!test_path.empty()) options.test = test_path;
      if (!predictions_path.empty()) options.predictions = predictions_path;
      options.predictions_type = predictions_type;
      wdaug::pipeline::run_evaluate(build_config(evaluate, flags), options);
    } else if (app.got_subcommand(report)) {
      wdaug::pipeline::run_report(build_config(report, flags));
    }
    return 0;
  } catch (const wdaug::PlanError& e) {
    std::cerr << "wdaug: " << e.what() << "\n";
    return 2;
  } catch (const wdaug::ProviderError& e) {
    std::cerr << "wdaug: " << e.what() << "\n";
    return 3;
  } catch (const wdaug::Error& e) {
    std::cerr << "wdaug: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "wdaug: internal error: " << e.what() << "\n";
    return 1;
  }
}
