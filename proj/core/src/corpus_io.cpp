#include "wdaug/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/rng.hpp"

namespace wdaug {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

LabeledDocument parse_record(const std::string& line, std::size_t line_no) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
  }
  if (!rec.is_object()) {
    throw ParseError("line " + std::to_string(line_no) + ": record is not a JSON object");
  }
  const auto require_string = [&](const char* key) -> std::string {
    if (!rec.contains(key) || !rec[key].is_string()) {
      throw ParseError("line " + std::to_string(line_no) + ": missing string field '" + key + "'");
    }
    return rec[key].get<std::string>();
  };
  LabeledDocument doc;
  doc.id = require_string("id");
  doc.text = require_string("text");
  if (doc.text.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": empty text (id '" + doc.id + "')");
  }
  if (rec.contains("explanation")) {
    if (!rec["explanation"].is_string()) {
      throw ParseError("line " + std::to_string(line_no) + ": 'explanation' must be a string");
    }
    doc.explanation = rec["explanation"].get<std::string>();
  }
  const std::string label_str = require_string("label");
  const auto label = parse_label(label_str);
  if (!label) {
    throw ParseError("line " + std::to_string(line_no) + ": unknown label \"" + label_str + "\"");
  }
  doc.label = *label;
  std::string source_str = "original";
  if (rec.contains("source")) {
    if (!rec["source"].is_string()) {
      throw ParseError("line " + std::to_string(line_no) + ": 'source' must be a string");
    }
    source_str = rec["source"].get<std::string>();
  }
  const auto source = parse_source(source_str);
  if (!source) {
    throw ParseError("line " + std::to_string(line_no) + ": unknown source \"" + source_str +
                     "\"");
  }
  doc.source = *source;
  if (rec.contains("parent_id")) {
    if (!rec["parent_id"].is_string()) {
      throw ParseError("line " + std::to_string(line_no) + ": 'parent_id' must be a string");
    }
    doc.parent_id = rec["parent_id"].get<std::string>();
  }
  return doc;
}

LabeledCorpus subset_by_indices(const LabeledCorpus& corpus, const std::vector<bool>& take,
                                bool invert) {
  std::vector<LabeledDocument> docs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (take[i] != invert) docs.push_back(corpus[i]);
  }
  return LabeledCorpus(std::move(docs));
}

}  // namespace

LabeledCorpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open corpus file: " + path.string());
  }
  std::vector<LabeledDocument> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    docs.push_back(parse_record(line, line_no));
  }
  try {
    return LabeledCorpus(std::move(docs));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw UsageError("cannot open for writing: " + path.string());
  }
  for (const auto& doc : corpus.documents()) {
    ordered_json rec;
    rec["id"] = doc.id;
    rec["text"] = doc.text;
    if (!doc.explanation.empty()) rec["explanation"] = doc.explanation;
    rec["label"] = std::string(label_code(doc.label));
    rec["source"] = std::string(source_name(doc.source));
    if (!doc.parent_id.empty()) rec["parent_id"] = doc.parent_id;
    out << rec.dump() << "\n";
  }
  if (!out.flush()) {
    throw UsageError("write failed: " + path.string());
  }
}

SplitResult stratified_split(const LabeledCorpus& corpus, std::size_t per_class_test,
                             std::uint64_t seed) {
  if (per_class_test == 0) {
    throw UsageError("per_class_test must be positive");
  }
  for (const auto& doc : corpus.documents()) {
    if (doc.source != Source::Original) {
      throw UsageError("stratified_split expects an original-only corpus; found source '" +
                       std::string(source_name(doc.source)) + "' (id '" + doc.id + "')");
    }
  }
  std::vector<bool> in_test(corpus.size(), false);
  for (const Label label : kLabels) {
    const auto indices = corpus.indices_of(label);
    if (indices.size() <= per_class_test) {
      throw UsageError("class " + std::string(label_code(label)) + " has " +
                       std::to_string(indices.size()) + " records, need more than " +
                       std::to_string(per_class_test) + " for the test carve-out");
    }
    rng::Engine engine(rng::derive_seed(seed, "split/" + std::string(label_code(label))));
    auto perm = engine.permutation(indices.size());
    for (std::size_t k = 0; k < per_class_test; ++k) {
      in_test[indices[perm[k]]] = true;
    }
  }
  return {subset_by_indices(corpus, in_test, true), subset_by_indices(corpus, in_test, false)};
}

SplitResult fraction_split(const LabeledCorpus& corpus, double fraction, bool stratified,
                           std::uint64_t seed) {
  if (fraction < 0.0 || fraction >= 1.0) {
    throw UsageError("split fraction must lie in [0, 1)");
  }
  std::vector<bool> carved(corpus.size(), false);
  if (stratified) {
    for (const Label label : kLabels) {
      const auto indices = corpus.indices_of(label);
      const auto n = static_cast<std::size_t>(fraction * static_cast<double>(indices.size()));
      rng::Engine engine(rng::derive_seed(seed, "fraction/" + std::string(label_code(label))));
      auto perm = engine.permutation(indices.size());
      for (std::size_t k = 0; k < n; ++k) carved[indices[perm[k]]] = true;
    }
  } else {
    const auto n = static_cast<std::size_t>(fraction * static_cast<double>(corpus.size()));
    rng::Engine engine(rng::derive_seed(seed, "fraction/all"));
    auto perm = engine.permutation(corpus.size());
    for (std::size_t k = 0; k < n; ++k) carved[perm[k]] = true;
  }
  return {subset_by_indices(corpus, carved, true), subset_by_indices(corpus, carved, false)};
}

}  // namespace wdaug
