#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "support/tempdir.hpp"
#include "wdaug/config.hpp"
#include "wdaug/error.hpp"

using namespace wdaug;
using wdaug::testing::TempDir;

TEST_SUITE("config") {

TEST_CASE("defaults document the published settings") {
  const RunConfig config;
  CHECK(config.out == "out");
  CHECK(config.per_class_test == 0);
  CHECK(config.validation_fraction == doctest::Approx(0.2));
  CHECK(config.stratified_validation);
  CHECK(config.seed == 42);
  CHECK(config.method == "eda");
  CHECK(config.eda_alpha == doctest::Approx(0.1));
  CHECK(config.eda_naug == 1);
  CHECK(config.bt_pivot == "fr");
  CHECK(config.llm_api == "chat");
  CHECK(config.llm_model == "gpt-3.5-turbo");
  CHECK(config.llm_temperature == doctest::Approx(0.7));
  CHECK(config.llm_max_tokens == 256);
  CHECK(config.bert_epochs == 10);
  CHECK(config.bert_batch_size == 32);
  CHECK(config.bert_learning_rate == doctest::Approx(3e-5));
  CHECK(config.bert_max_length == 256);
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("load reads every section") {
  TempDir dir;
  const auto path = dir.write_file("config.json", R"({
    "paths": {"input": "corpus.jsonl", "out": "run1", "lexicon": "lex.json",
              "exemplars": "ex.json"},
    "split": {"per_class_test": 45, "validation_fraction": 0.25,
              "stratified_validation": false, "seed": 7},
    "augment": {"method": "bt", "parallelism": 4},
    "eda": {"alpha": 0.2, "n_aug": 3},
    "bt": {"endpoint": "http://127.0.0.1:9/translate", "pivot": "de",
           "max_retries": 5, "timeout_s": 12.5},
    "llm": {"base_url": "http://127.0.0.1:9", "api": "completions",
            "model": "m1", "temperature": 0.3, "max_tokens": 64,
            "max_retries": 2, "concurrency": 8, "rate_limit_per_s": 2.5},
    "embed": {"base_url": "http://127.0.0.1:9", "models": ["e1", "e2"],
              "max_retries": 1},
    "external_bert": {"epochs": 4, "batch_size": 16, "learning_rate": 1e-4,
                      "max_length": 128}
  })");
  const auto config = RunConfig::load(path);
  CHECK(config.input == "corpus.jsonl");
  CHECK(config.out == "run1");
  CHECK(config.lexicon == "lex.json");
  CHECK(config.exemplars == "ex.json");
  CHECK(config.per_class_test == 45);
  CHECK(config.validation_fraction == doctest::Approx(0.25));
  CHECK_FALSE(config.stratified_validation);
  CHECK(config.seed == 7);
  CHECK(config.method == "bt");
  CHECK(config.parallelism == 4);
  CHECK(config.eda_alpha == doctest::Approx(0.2));
  CHECK(config.eda_naug == 3);
  CHECK(config.bt_endpoint == "http://127.0.0.1:9/translate");
  CHECK(config.bt_pivot == "de");
  CHECK(config.bt_max_retries == 5);
  CHECK(config.bt_timeout_s == doctest::Approx(12.5));
  CHECK(config.llm_api == "completions");
  CHECK(config.llm_model == "m1");
  CHECK(config.llm_temperature == doctest::Approx(0.3));
  CHECK(config.llm_max_tokens == 64);
  CHECK(config.llm_max_retries == 2);
  CHECK(config.llm_concurrency == 8);
  CHECK(config.llm_rate_limit_per_s == doctest::Approx(2.5));
  CHECK(config.embed_base_url == "http://127.0.0.1:9");
  const std::vector<std::string> models{"e1", "e2"};
  CHECK(config.embed_models == models);
  CHECK(config.embed_max_retries == 1);
  CHECK(config.bert_epochs == 4);
  CHECK(config.bert_batch_size == 16);
  CHECK(config.bert_learning_rate == doctest::Approx(1e-4));
  CHECK(config.bert_max_length == 128);
}

TEST_CASE("partial configs keep the defaults elsewhere") {
  TempDir dir;
  const auto path = dir.write_file("partial.json", R"({"eda": {"alpha": 0.05}})");
  const auto config = RunConfig::load(path);
  CHECK(config.eda_alpha == doctest::Approx(0.05));
  CHECK(config.eda_naug == 1);
  CHECK(config.method == "eda");
  CHECK(config.seed == 42);
}

TEST_CASE("load failure modes") {
  TempDir dir;
  CHECK_THROWS_AS(RunConfig::load(dir / "absent.json"), UsageError);
  CHECK_THROWS_AS(RunConfig::load(dir.write_file("arr.json", "[]")), ParseError);
  CHECK_THROWS_AS(RunConfig::load(dir.write_file("trunc.json", "{")), ParseError);
  CHECK_THROWS_AS(
      RunConfig::load(dir.write_file("badsec.json", R"({"split": 3})")),
      ParseError);
  // Wrong value type inside a section names the key path.
  try {
    RunConfig::load(dir.write_file("badtype.json", R"({"split": {"seed": "many"}})"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("split.seed") != std::string::npos);
  }
  // Unknown keys only warn.
  CHECK_NOTHROW(RunConfig::load(dir.write_file(
      "extra.json", R"({"split": {"mystery": 1}, "bonus": {}})")));
}

TEST_CASE("validate guards value ranges") {
  RunConfig config;
  config.method = "gan";
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.per_class_test = -1;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.validation_fraction = 1.0;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.validation_fraction = -0.1;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.eda_alpha = 1.5;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.eda_naug = 0;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.llm_api = "grpc";
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.llm_max_tokens = 0;
  CHECK_THROWS_AS(config.validate(), UsageError);
  config = RunConfig{};
  config.llm_temperature = -0.5;
  CHECK_THROWS_AS(config.validate(), UsageError);
}

TEST_CASE("overrides beat the config file and validation runs last") {
  TempDir dir;
  const auto path = dir.write_file("base.json", R"({
    "split": {"seed": 1},
    "augment": {"method": "eda"},
    "eda": {"alpha": 0.1}
  })");
  ConfigOverrides overrides;
  overrides.seed = 99;
  overrides.method = "llm";
  overrides.eda_alpha = 0.4;
  overrides.embed_models = std::vector<std::string>{"remote-a"};
  const auto config = make_config(path, overrides);
  CHECK(config.seed == 99);
  CHECK(config.method == "llm");
  CHECK(config.eda_alpha == doctest::Approx(0.4));
  REQUIRE(config.embed_models.size() == 1);
  CHECK(config.embed_models[0] == "remote-a");

  ConfigOverrides bad;
  bad.method = "diffusion";
  CHECK_THROWS_AS(make_config(std::nullopt, bad), UsageError);

  // No config file: pure defaults plus overrides.
  ConfigOverrides just_seed;
  just_seed.seed = 5;
  const auto defaults = make_config(std::nullopt, just_seed);
  CHECK(defaults.seed == 5);
  CHECK(defaults.method == "eda");
}

}  // TEST_SUITE
