#include "wdaug/config.hpp"

#include <fstream>
#include <set>
#include <string>

#include "config_json.hpp"
#include "wdaug/error.hpp"
#include "wdaug/log.hpp"

namespace wdaug {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Typed field extraction with key-path error messages.
template <typename T>
void read_field(const json& section, const std::string& section_name, const std::string& key,
                T& out) {
  const auto it = section.find(key);
  if (it == section.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ParseError("config: " + section_name + "." + key + " has the wrong type");
  }
}

void read_path(const json& section, const std::string& section_name, const std::string& key,
               std::filesystem::path& out) {
  std::string value;
  bool present = section.contains(key);
  read_field(section, section_name, key, value);
  if (present) out = value;
}

void warn_unknown(const json& section, const std::string& section_name,
                  const std::set<std::string>& known) {
  for (const auto& [key, value] : section.items()) {
    if (!known.count(key)) {
      log::warn("config: ignoring unknown key " +
                (section_name.empty() ? key : section_name + "." + key));
    }
  }
}

const json* get_section(const json& j, const std::string& name) {
  const auto it = j.find(name);
  if (it == j.end()) return nullptr;
  if (!it->is_object()) {
    throw ParseError("config: " + name + " must be an object");
  }
  return &*it;
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open config file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("config " + path.string() + ": expected a JSON object");
  }
  RunConfig config;
  warn_unknown(j, "",
               {"paths", "split", "augment", "eda", "bt", "llm", "embed", "external_bert"});
  if (const json* sec = get_section(j, "paths")) {
    const auto& s = *sec;
    warn_unknown(s, "paths", {"input", "out", "lexicon", "exemplars"});
    read_path(s, "paths", "input", config.input);
    read_path(s, "paths", "out", config.out);
    read_path(s, "paths", "lexicon", config.lexicon);
    read_path(s, "paths", "exemplars", config.exemplars);
  }
  if (const json* sec = get_section(j, "split")) {
    const auto& s = *sec;
    warn_unknown(s, "split",
                 {"per_class_test", "validation_fraction", "stratified_validation", "seed"});
    read_field(s, "split", "per_class_test", config.per_class_test);
    read_field(s, "split", "validation_fraction", config.validation_fraction);
    read_field(s, "split", "stratified_validation", config.stratified_validation);
    read_field(s, "split", "seed", config.seed);
  }
  if (const json* sec = get_section(j, "augment")) {
    const auto& s = *sec;
    warn_unknown(s, "augment", {"method", "parallelism"});
    read_field(s, "augment", "method", config.method);
    read_field(s, "augment", "parallelism", config.parallelism);
  }
  if (const json* sec = get_section(j, "eda")) {
    const auto& s = *sec;
    warn_unknown(s, "eda", {"alpha", "n_aug"});
    read_field(s, "eda", "alpha", config.eda_alpha);
    read_field(s, "eda", "n_aug", config.eda_naug);
  }
  if (const json* sec = get_section(j, "bt")) {
    const auto& s = *sec;
    warn_unknown(s, "bt", {"endpoint", "pivot", "max_retries", "timeout_s"});
    read_field(s, "bt", "endpoint", config.bt_endpoint);
    read_field(s, "bt", "pivot", config.bt_pivot);
    read_field(s, "bt", "max_retries", config.bt_max_retries);
    read_field(s, "bt", "timeout_s", config.bt_timeout_s);
  }
  if (const json* sec = get_section(j, "llm")) {
    const auto& s = *sec;
    warn_unknown(s, "llm",
                 {"base_url", "api", "model", "temperature", "max_tokens", "max_retries",
                  "concurrency", "rate_limit_per_s"});
    read_field(s, "llm", "base_url", config.llm_base_url);
    read_field(s, "llm", "api", config.llm_api);
    read_field(s, "llm", "model", config.llm_model);
    read_field(s, "llm", "temperature", config.llm_temperature);
    read_field(s, "llm", "max_tokens", config.llm_max_tokens);
    read_field(s, "llm", "max_retries", config.llm_max_retries);
    read_field(s, "llm", "concurrency", config.llm_concurrency);
    read_field(s, "llm", "rate_limit_per_s", config.llm_rate_limit_per_s);
  }
  if (const json* sec = get_section(j, "embed")) {
    const auto& s = *sec;
    warn_unknown(s, "embed", {"base_url", "models", "max_retries"});
    read_field(s, "embed", "base_url", config.embed_base_url);
    read_field(s, "embed", "models", config.embed_models);
    read_field(s, "embed", "max_retries", config.embed_max_retries);
  }
  if (const json* sec = get_section(j, "external_bert")) {
    const auto& s = *sec;
    warn_unknown(s, "external_bert", {"epochs", "batch_size", "learning_rate", "max_length"});
    read_field(s, "external_bert", "epochs", config.bert_epochs);
    read_field(s, "external_bert", "batch_size", config.bert_batch_size);
    read_field(s, "external_bert", "learning_rate", config.bert_learning_rate);
    read_field(s, "external_bert", "max_length", config.bert_max_length);
  }
  return config;
}

void RunConfig::validate() const {
  if (method != "eda" && method != "bt" && method != "llm") {
    throw UsageError("augment.method must be one of eda, bt, llm; got \"" + method + "\"");
  }
  if (per_class_test < 0) {
    throw UsageError("split.per_class_test must be >= 0");
  }
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) {
    throw UsageError("split.validation_fraction must lie in [0, 1)");
  }
  if (!(eda_alpha >= 0.0 && eda_alpha <= 1.0)) {
    throw UsageError("eda.alpha must lie in [0, 1]");
  }
  if (eda_naug < 1) {
    throw UsageError("eda.n_aug must be >= 1");
  }
  if (llm_api != "chat" && llm_api != "completions") {
    throw UsageError("llm.api must be \"chat\" or \"completions\"");
  }
  if (llm_max_tokens < 1) {
    throw UsageError("llm.max_tokens must be >= 1");
  }
  if (llm_temperature < 0.0) {
    throw UsageError("llm.temperature must be >= 0");
  }
}

void ConfigOverrides::apply(RunConfig& config) const {
  if (input) config.input = *input;
  if (out) config.out = *out;
  if (lexicon) config.lexicon = *lexicon;
  if (exemplars) config.exemplars = *exemplars;
  if (per_class_test) config.per_class_test = *per_class_test;
  if (validation_fraction) config.validation_fraction = *validation_fraction;
  if (seed) config.seed = *seed;
  if (method) config.method = *method;
  if (parallelism) config.parallelism = *parallelism;
  if (eda_alpha) config.eda_alpha = *eda_alpha;
  if (eda_naug) config.eda_naug = *eda_naug;
  if (bt_endpoint) config.bt_endpoint = *bt_endpoint;
  if (bt_pivot) config.bt_pivot = *bt_pivot;
  if (llm_base_url) config.llm_base_url = *llm_base_url;
  if (llm_api) config.llm_api = *llm_api;
  if (llm_model) config.llm_model = *llm_model;
  if (llm_temperature) config.llm_temperature = *llm_temperature;
  if (llm_concurrency) config.llm_concurrency = *llm_concurrency;
  if (embed_base_url) config.embed_base_url = *embed_base_url;
  if (embed_models) config.embed_models = *embed_models;
}

RunConfig make_config(const std::optional<std::filesystem::path>& config_path,
                      const ConfigOverrides& overrides) {
  RunConfig config = config_path ? RunConfig::load(*config_path) : RunConfig{};
  overrides.apply(config);
  config.validate();
  return config;
}

ordered_json config_to_json(const RunConfig& config) {
  ordered_json j;
  j["paths"] = {{"input", config.input.string()},
                {"out", config.out.string()},
                {"lexicon", config.lexicon.string()},
                {"exemplars", config.exemplars.string()}};
  j["split"] = {{"per_class_test", config.per_class_test},
                {"validation_fraction", config.validation_fraction},
                {"stratified_validation", config.stratified_validation},
                {"seed", config.seed}};
  j["augment"] = {{"method", config.method}, {"parallelism", config.parallelism}};
  j["eda"] = {{"alpha", config.eda_alpha}, {"n_aug", config.eda_naug}};
  j["bt"] = {{"endpoint", config.bt_endpoint},
             {"pivot", config.bt_pivot},
             {"max_retries", config.bt_max_retries},
             {"timeout_s", config.bt_timeout_s}};
  j["llm"] = {{"base_url", config.llm_base_url},
              {"api", config.llm_api},
              {"model", config.llm_model},
              {"temperature", config.llm_temperature},
              {"max_tokens", config.llm_max_tokens},
              {"max_retries", config.llm_max_retries},
              {"concurrency", config.llm_concurrency},
              {"rate_limit_per_s", config.llm_rate_limit_per_s}};
  j["embed"] = {{"base_url", config.embed_base_url},
                {"models", config.embed_models},
                {"max_retries", config.embed_max_retries}};
  j["external_bert"] = {{"epochs", config.bert_epochs},
                        {"batch_size", config.bert_batch_size},
                        {"learning_rate", config.bert_learning_rate},
                        {"max_length", config.bert_max_length}};
  return j;
}

}  // namespace wdaug
