#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wdaug/document.hpp"

namespace wdaug::clf {

// Multinomial naive Bayes with Laplace smoothing over the shared tokenizer's
// bag of words. Training is independent of document order.
class BowModel {
 public:
  struct Prediction {
    Label label = Label::PA;
    std::array<double, kNumLabels> posterior{};  // sums to 1 over present classes
  };

  static BowModel train(const LabeledCorpus& corpus, double smoothing = 1.0);

  Prediction predict(const std::string& text) const;

  // Unnormalized log score per class; classes absent from training get
  // -infinity. Exposed for the shift-invariance property test.
  std::array<double, kNumLabels> log_scores(const std::string& text) const;

  double prior(Label label) const;
  // Smoothed P(token | class); out-of-vocabulary tokens get the unseen-token
  // likelihood s / (total_c + s * V).
  double token_likelihood(Label label, const std::string& token) const;
  std::size_t vocabulary_size() const { return vocab_.size(); }
  double smoothing() const { return smoothing_; }

 private:
  double smoothing_ = 1.0;
  std::vector<std::string> vocab_;  // sorted for determinism
  std::array<std::vector<std::size_t>, kNumLabels> counts_;  // per class, per vocab index
  std::array<std::size_t, kNumLabels> token_totals_{};
  std::array<std::size_t, kNumLabels> docs_{};
  std::size_t total_docs_ = 0;

  std::optional<std::size_t> vocab_index(const std::string& token) const;
};

// K x K counts; rows are gold labels, columns are predictions.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t k);

  std::size_t size() const { return k_; }
  std::size_t& at(std::size_t gold, std::size_t pred);
  std::size_t at(std::size_t gold, std::size_t pred) const;
  std::size_t total() const;
  std::size_t trace() const;
  std::size_t row_sum(std::size_t gold) const;
  std::size_t col_sum(std::size_t pred) const;

 private:
  std::size_t k_;
  std::vector<std::size_t> cells_;
};

// Fixed four-class matrix in label order; throws UsageError on length
// mismatch.
ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& pred);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t ns = 0;       // correctly classified samples (diagonal)
  std::size_t support = 0;  // gold row sum
};

struct EvalReport {
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  double mcc = 0.0;
  std::size_t total = 0;
};

// Throws UsageError on an empty matrix. Zero-denominator cells score 0 and
// are logged.
EvalReport metrics(const ConfusionMatrix& cm);

// Multiclass (Gorodkin) MCC; 0 when the denominator vanishes; clamped to
// [-1, 1]. Throws UsageError on an empty matrix.
double mcc(const ConfusionMatrix& cm);

// Labels predicted for every document, in corpus order.
std::vector<Label> predict_batch(const BowModel& model, const LabeledCorpus& corpus,
                                 unsigned parallelism = 1);

// Convenience: predict then tabulate against the corpus's own labels.
ConfusionMatrix evaluate(const BowModel& model, const LabeledCorpus& corpus,
                         unsigned parallelism = 1);

// JSONL {"id": ..., "label": ...}; every gold id must be covered. Unmatched
// prediction ids are counted and warned about.
ConfusionMatrix import_external_predictions(const std::filesystem::path& path,
                                            const LabeledCorpus& gold);

// Aligned text table: Type, Val-A, T-P, T-R, T-F, T-A, T-MCC.
struct OverallRow {
  std::string type;
  std::optional<double> val_accuracy;  // absent renders as "-"
  double t_p = 0.0;
  double t_r = 0.0;
  double t_f = 0.0;
  double t_a = 0.0;
  double t_mcc = 0.0;
};
std::string render_overall_table(const std::vector<OverallRow>& rows);

// Aligned text table: Class, Type, T-P, T-R, T-F, NS, INS. The first entry is
// the baseline; INS = 100 * (NS - baseline NS) / class support, blank on
// baseline rows.
struct ClassTableEntry {
  std::string type;
  std::vector<ClassMetrics> per_class;  // one per label, fixed order
};
std::string render_class_table(const std::vector<ClassTableEntry>& entries);

}  // namespace wdaug::clf
