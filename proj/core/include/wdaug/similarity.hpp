#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wdaug/document.hpp"
#include "wdaug/embedding.hpp"
#include "wdaug/postag.hpp"

namespace wdaug::sim {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Clipped n-gram overlap; n must be 1 or 2. Either side without an n-gram
// scores zero.
RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n);

// Longest-common-subsequence variant.
RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference);

// dot(u,v)/(|u||v|); throws UsageError on dimension mismatch or a zero-norm
// side.
double cosine(const std::vector<double>& u, const std::vector<double>& v);

// Jaccard coefficient over the SETS of tags in each text. Both token lists
// empty -> 1.0; exactly one empty -> 0.0.
double pos_overlap(const std::string& a, const std::string& b, pos::PosTagger& tagger);

struct DocumentPair {
  LabeledDocument original;
  LabeledDocument augmented;
};

// Pairs every augmented record in the corpus with its parent. Throws
// UsageError when a parent id is missing from the corpus.
std::vector<DocumentPair> make_pairs(const LabeledCorpus& corpus);

struct NamedProvider {
  std::string name;
  std::shared_ptr<embed::EmbeddingProvider> provider;
};

// One comparison: kind is "text" or "explanation". A cosine cell is empty
// when that provider failed for this row.
struct SimilarityRow {
  std::string pair_id;  // id of the augmented record
  std::string method;   // eda | bt | llm
  std::string kind;
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
  double overlap = 0.0;
  std::vector<std::optional<double>> cosines;  // aligned with provider order
};

struct MethodMeans {
  std::string method;
  std::string kind;
  std::size_t pairs = 0;
  double rouge1_f1 = 0.0;
  double rouge2_f1 = 0.0;
  double rougeL_f1 = 0.0;
  double overlap = 0.0;
  std::vector<std::optional<double>> cosines;  // mean over present cells
};

struct SimilarityReport {
  std::vector<std::string> provider_names;
  std::vector<SimilarityRow> rows;
  std::vector<MethodMeans> means;  // grouped by method, then kind
};

// One "text" row per pair, plus an "explanation" row when both sides carry
// one. Provider failures downgrade to a warning and an empty cell. Throws
// UsageError when pairs is empty.
SimilarityReport similarity_report(const std::vector<DocumentPair>& pairs,
                                   const std::vector<NamedProvider>& providers,
                                   pos::PosTagger& tagger, unsigned parallelism = 1);

// CSV: pair_id,method,kind,rouge1_f1,rouge2_f1,rougeL_f1,pos_overlap, then
// one cosine_<provider> column each; empty cell for a missing value.
void write_report_csv(const SimilarityReport& report, const std::filesystem::path& path);

// JSON object with provider list, row count, and per-(method, kind) means.
void write_report_summary(const SimilarityReport& report, const std::filesystem::path& path);

// Human-readable per-method means block (stdout rendering).
std::string render_report(const SimilarityReport& report);

}  // namespace wdaug::sim
