// Guards the bundled files under data/: they must load cleanly and the
// synthetic corpora must match the generator's output bit for bit.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/synthetic.hpp"
#include "wdaug/config.hpp"
#include "wdaug/corpus_io.hpp"
#include "wdaug/lexicon.hpp"
#include "wdaug/llm.hpp"

using namespace wdaug;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return fs::path(WDAUG_DATA_DIR); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("data_files") {

TEST_CASE("synthetic_imbalanced.jsonl matches the generator") {
  const auto path = data_dir() / "synthetic_imbalanced.jsonl";
  const auto loaded = load_corpus(path);
  CHECK(loaded.size() == 800);
  CHECK(loaded.class_counts()[0] == 400);
  CHECK(loaded.class_counts()[1] == 200);
  CHECK(loaded.class_counts()[2] == 100);
  CHECK(loaded.class_counts()[3] == 100);
  for (const auto& doc : loaded.documents()) {
    CHECK(doc.source == Source::Original);
    CHECK_FALSE(doc.explanation.empty());
  }
  const auto generated = testing::make_synthetic_corpus(testing::SynthParams{});
  CHECK(loaded == generated);
}

TEST_CASE("demo_mixed.jsonl matches the generator") {
  const auto path = data_dir() / "demo_mixed.jsonl";
  const auto loaded = load_corpus(path);
  CHECK(loaded.size() == 108);
  CHECK(loaded.class_counts()[0] == 28);
  CHECK(loaded.class_counts()[1] == 22);
  CHECK(loaded.class_counts()[2] == 34);
  CHECK(loaded.class_counts()[3] == 24);
  testing::SynthParams params;
  params.counts = {28, 22, 34, 24};
  params.seed = 7;
  params.id_prefix = "demo";
  CHECK(loaded == testing::make_synthetic_corpus(params));
}

TEST_CASE("synthetic_lexicon.json matches the generator") {
  const auto lex = SynonymLexicon::load(data_dir() / "synthetic_lexicon.json");
  const auto expected = testing::make_synthetic_lexicon(testing::SynthParams{});
  CHECK(lex.size() == expected.size());
  for (const auto& [word, synonyms] : expected) {
    CHECK(lex.synonyms(word) == synonyms);
  }
}

TEST_CASE("the English lexicon loads and is plain ASCII") {
  const auto path = data_dir() / "lexicon.json";
  const auto raw = slurp(path);
  for (unsigned char c : raw) {
    REQUIRE(c < 0x80);
  }
  const auto lex = SynonymLexicon::load(path);
  CHECK(lex.size() >= 50);
  CHECK(lex.has("tired"));
  CHECK_FALSE(lex.synonyms("tired").empty());
}

TEST_CASE("the exemplar file renders a valid explanation prompt") {
  const auto tmpl = llm::PromptTemplate::load(data_dir() / "exemplars.json");
  CHECK(tmpl.exemplars().size() == 5);
  const auto prompt = llm::render_explanation_prompt(tmpl, {"orig", "expl"}, "aug");
  CHECK(prompt.find("Consider the examples") == 0);
}

TEST_CASE("the example config loads and validates") {
  const auto config = RunConfig::load(data_dir() / "config.example.json");
  CHECK_NOTHROW(config.validate());
  CHECK((config.method == "eda" || config.method == "bt" || config.method == "llm"));
}

}  // TEST_SUITE
