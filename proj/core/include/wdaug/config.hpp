#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wdaug {

// Effective run configuration: JSON config file plus flag overrides (flags
// win). Field defaults below are the documented defaults; paper-sourced ones
// are noted inline.
struct RunConfig {
  // paths
  std::filesystem::path input;      // corpus JSONL
  std::filesystem::path out = "out";
  std::filesystem::path lexicon;    // synonym lexicon for EDA (optional)
  std::filesystem::path exemplars;  // five text-explanation pairs for LLM prompts

  // split
  long long per_class_test = 0;       // 0 = derive from the plan rule
  double validation_fraction = 0.2;   // paper: "20% of the training set"
  bool stratified_validation = true;  // documented choice; the paper is silent
  std::uint64_t seed = 42;

  // augment
  std::string method = "eda";  // eda | bt | llm
  unsigned parallelism = 1;    // eda/bt workers; llm uses llm_concurrency

  // eda
  double eda_alpha = 0.1;
  int eda_naug = 1;

  // bt
  std::string bt_endpoint;
  std::string bt_pivot = "fr";
  int bt_max_retries = 3;
  double bt_timeout_s = 30.0;

  // llm
  std::string llm_base_url = "https://api.openai.com";
  std::string llm_api = "chat";  // chat | completions
  std::string llm_model = "gpt-3.5-turbo";
  double llm_temperature = 0.7;  // paper: "keep temperature as 0.7"
  int llm_max_tokens = 256;      // not stated by the paper; documented default
  int llm_max_retries = 3;
  unsigned llm_concurrency = 1;
  double llm_rate_limit_per_s = 0.0;  // 0 = unlimited

  // embed
  std::string embed_base_url;             // empty = builtin embedder only
  std::vector<std::string> embed_models;  // remote model names
  int embed_max_retries = 3;

  // external_bert: documented defaults for out-of-repo fine-tuning scripts;
  // this tool only records them and evaluates prediction files.
  int bert_epochs = 10;
  int bert_batch_size = 32;
  double bert_learning_rate = 3e-5;
  int bert_max_length = 256;

  // Parses the JSON config file; unknown keys warn, bad types throw
  // ParseError, bad values throw UsageError.
  static RunConfig load(const std::filesystem::path& path);

  // Checks value ranges and the method name; throws UsageError.
  void validate() const;
};

// Flag-level overrides; every engaged field replaces the config value.
struct ConfigOverrides {
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> exemplars;
  std::optional<long long> per_class_test;
  std::optional<double> validation_fraction;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> method;
  std::optional<unsigned> parallelism;
  std::optional<double> eda_alpha;
  std::optional<int> eda_naug;
  std::optional<std::string> bt_endpoint;
  std::optional<std::string> bt_pivot;
  std::optional<std::string> llm_base_url;
  std::optional<std::string> llm_api;
  std::optional<std::string> llm_model;
  std::optional<double> llm_temperature;
  std::optional<unsigned> llm_concurrency;
  std::optional<std::string> embed_base_url;
  std::optional<std::vector<std::string>> embed_models;

  void apply(RunConfig& config) const;
};

// Loads the file when given, else starts from defaults; then applies
// overrides and validates.
RunConfig make_config(const std::optional<std::filesystem::path>& config_path,
                      const ConfigOverrides& overrides);

}  // namespace wdaug
