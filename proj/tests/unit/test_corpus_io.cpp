#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "support/synthetic.hpp"
#include "support/tempdir.hpp"
#include "wdaug/corpus_io.hpp"
#include "wdaug/error.hpp"

using namespace wdaug;
using wdaug::testing::TempDir;

namespace {

LabeledCorpus tiny_corpus() {
  std::vector<LabeledDocument> docs;
  const char* codes[] = {"PA", "IVA", "SA", "SEA"};
  for (std::size_t c = 0; c < 4; ++c) {
    LabeledDocument d;
    d.id = std::string("doc-") + codes[c];
    d.text = std::string("text for ") + codes[c];
    d.explanation = c % 2 == 0 ? "why" : "";
    d.label = kLabels[c];
    docs.push_back(d);
  }
  return LabeledCorpus(docs);
}

std::multiset<std::string> ids_of(const LabeledCorpus& c) {
  std::multiset<std::string> out;
  for (const auto& d : c.documents()) out.insert(d.id);
  return out;
}

}  // namespace

TEST_SUITE("corpus_io") {

TEST_CASE("load counts one record per class") {
  TempDir dir;
  const auto path = dir.write_file(
      "four.jsonl",
      R"({"id": "1", "text": "a", "label": "PA"})"
      "\n"
      R"({"id": "2", "text": "b", "label": "IVA"})"
      "\n"
      R"({"id": "3", "text": "c", "label": "SA"})"
      "\n"
      R"({"id": "4", "text": "d", "label": "SEA"})"
      "\n");
  const auto corpus = load_corpus(path);
  CHECK(corpus.size() == 4);
  for (Label l : kLabels) CHECK(corpus.count(l) == 1);
}

TEST_CASE("empty file loads as empty corpus") {
  TempDir dir;
  const auto corpus = load_corpus(dir.write_file("empty.jsonl", ""));
  CHECK(corpus.size() == 0);
  for (Label l : kLabels) CHECK(corpus.count(l) == 0);
}

TEST_CASE("bad label names the line and the label") {
  TempDir dir;
  const auto path = dir.write_file(
      "bad.jsonl",
      R"({"id": "1", "text": "a", "label": "PA"})"
      "\n"
      R"({"id": "2", "text": "b", "label": "IVA"})"
      "\n"
      R"({"id": "3", "text": "c", "label": "XX"})"
      "\n");
  try {
    load_corpus(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("3") != std::string::npos);
    CHECK(what.find("XX") != std::string::npos);
  }
}

TEST_CASE("missing file error names the path") {
  try {
    load_corpus("/nonexistent/nowhere.jsonl");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("nowhere.jsonl") != std::string::npos);
  }
}

TEST_CASE("write then load round-trips exactly") {
  TempDir dir;
  const auto corpus = tiny_corpus();
  write_corpus(corpus, dir / "out.jsonl");
  CHECK(load_corpus(dir / "out.jsonl") == corpus);
}

TEST_CASE("write empty corpus loads back empty") {
  TempDir dir;
  write_corpus(LabeledCorpus(), dir / "empty.jsonl");
  CHECK(load_corpus(dir / "empty.jsonl").empty());
}

TEST_CASE("write to unwritable path names the path") {
  try {
    write_corpus(tiny_corpus(), "/nonexistent-dir/x.jsonl");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x.jsonl") != std::string::npos);
  }
}

TEST_CASE("blank lines are skipped, malformed JSON names the line") {
  TempDir dir;
  const auto ok = dir.write_file("blanks.jsonl",
                                 "\n"
                                 R"({"id": "1", "text": "a", "label": "PA"})"
                                 "\n\n");
  CHECK(load_corpus(ok).size() == 1);
  const auto bad = dir.write_file("mangled.jsonl",
                                  R"({"id": "1", "text": "a", "label": "PA"})"
                                  "\n"
                                  "{not json\n");
  try {
    load_corpus(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("stratified_split carves exact per-class counts") {
  testing::SynthParams params;
  params.counts = {8, 6, 5, 7};
  params.seed = 31;
  const auto corpus = testing::make_synthetic_corpus(params);
  const auto split = stratified_split(corpus, 2, 42);
  for (Label l : kLabels) CHECK(split.test.count(l) == 2);
  CHECK(split.train.count(Label::PA) == 6);
  CHECK(split.train.count(Label::IVA) == 4);
  CHECK(split.train.count(Label::SA) == 3);
  CHECK(split.train.count(Label::SEA) == 5);

  // Union of ids is preserved; sides are disjoint.
  auto train_ids = ids_of(split.train);
  auto test_ids = ids_of(split.test);
  std::multiset<std::string> merged = train_ids;
  merged.insert(test_ids.begin(), test_ids.end());
  CHECK(merged == ids_of(corpus));
}

TEST_CASE("stratified_split at reference scale: 45 per class from (740,592,1139,621)") {
  testing::SynthParams params;
  params.counts = {740, 592, 1139, 621};
  params.seed = 5;
  const auto corpus = testing::make_synthetic_corpus(params);
  const auto split = stratified_split(corpus, 45, 42);
  CHECK(split.test.size() == 180);
  CHECK(split.train.count(Label::PA) == 695);
  CHECK(split.train.count(Label::IVA) == 547);
  CHECK(split.train.count(Label::SA) == 1094);
  CHECK(split.train.count(Label::SEA) == 576);
}

TEST_CASE("stratified_split is deterministic per seed and varies across seeds") {
  testing::SynthParams params;
  params.counts = {10, 9, 8, 7};
  const auto corpus = testing::make_synthetic_corpus(params);
  const auto a = stratified_split(corpus, 3, 7);
  const auto b = stratified_split(corpus, 3, 7);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  const auto c = stratified_split(corpus, 3, 8);
  CHECK(ids_of(c.test) != ids_of(a.test));
}

TEST_CASE("stratified_split demands more records than the carve") {
  testing::SynthParams params;
  params.counts = {3, 3, 3, 3};
  const auto corpus = testing::make_synthetic_corpus(params);
  CHECK_THROWS_AS(stratified_split(corpus, 3, 1), UsageError);
  CHECK_NOTHROW(stratified_split(corpus, 2, 1));
}

TEST_CASE("stratified_split rejects corpora with augmented records") {
  auto docs = tiny_corpus().documents();
  LabeledDocument aug;
  aug.id = "aug-1";
  aug.text = "generated";
  aug.label = Label::PA;
  aug.source = Source::Eda;
  aug.parent_id = "doc-PA";
  docs.push_back(aug);
  const LabeledCorpus corpus(docs);
  try {
    stratified_split(corpus, 1, 1);
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("original-only") != std::string::npos);
  }
}

TEST_CASE("stratified_split rejects a zero carve") {
  CHECK_THROWS_AS(stratified_split(tiny_corpus(), 0, 1), UsageError);
}

TEST_CASE("fraction_split stratified carves floor(fraction*count) per class") {
  testing::SynthParams params;
  params.counts = {10, 5, 4, 9};
  const auto corpus = testing::make_synthetic_corpus(params);
  const auto split = fraction_split(corpus, 0.25, true, 3);
  CHECK(split.test.count(Label::PA) == 2);   // floor(2.5)
  CHECK(split.test.count(Label::IVA) == 1);  // floor(1.25)
  CHECK(split.test.count(Label::SA) == 1);
  CHECK(split.test.count(Label::SEA) == 2);
  CHECK(split.train.size() + split.test.size() == corpus.size());
}

TEST_CASE("fraction_split uniform carves floor(fraction*total) overall") {
  testing::SynthParams params;
  params.counts = {10, 5, 4, 9};  // 28 total
  const auto corpus = testing::make_synthetic_corpus(params);
  const auto split = fraction_split(corpus, 0.25, false, 3);
  CHECK(split.test.size() == 7);
  CHECK(split.train.size() == 21);
}

TEST_CASE("fraction_split zero fraction keeps everything") {
  const auto corpus = tiny_corpus();
  const auto split = fraction_split(corpus, 0.0, true, 3);
  CHECK(split.train == corpus);
  CHECK(split.test.empty());
}

}  // TEST_SUITE
