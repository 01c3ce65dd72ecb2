#include "wdaug/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/log.hpp"
#include "wdaug/parallel.hpp"
#include "wdaug/text.hpp"

namespace wdaug::clf {

using nlohmann::json;

BowModel BowModel::train(const LabeledCorpus& corpus, double smoothing) {
  if (corpus.size() == 0) {
    throw UsageError("cannot train on an empty corpus");
  }
  if (!(smoothing > 0.0)) {
    throw UsageError("smoothing must be positive");
  }
  BowModel model;
  model.smoothing_ = smoothing;
  model.total_docs_ = corpus.size();

  // A sorted vocabulary makes parameters independent of document order.
  std::set<std::string> vocab_set;
  std::vector<std::vector<std::string>> token_lists;
  token_lists.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) {
    token_lists.push_back(text::tokenize(doc.text));
    for (const auto& token : token_lists.back()) {
      vocab_set.insert(token);
    }
  }
  model.vocab_.assign(vocab_set.begin(), vocab_set.end());
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(model.vocab_.size());
  for (std::size_t i = 0; i < model.vocab_.size(); ++i) {
    index.emplace(model.vocab_[i], i);
  }
  for (auto& per_class : model.counts_) {
    per_class.assign(model.vocab_.size(), 0);
  }
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const auto c = static_cast<std::size_t>(corpus.documents()[d].label);
    ++model.docs_[c];
    for (const auto& token : token_lists[d]) {
      ++model.counts_[c][index.at(token)];
      ++model.token_totals_[c];
    }
  }
  return model;
}

std::optional<std::size_t> BowModel::vocab_index(const std::string& token) const {
  const auto it = std::lower_bound(vocab_.begin(), vocab_.end(), token);
  if (it != vocab_.end() && *it == token) {
    return static_cast<std::size_t>(it - vocab_.begin());
  }
  return std::nullopt;
}

double BowModel::prior(Label label) const {
  return static_cast<double>(docs_[static_cast<std::size_t>(label)]) /
         static_cast<double>(total_docs_);
}

double BowModel::token_likelihood(Label label, const std::string& token) const {
  const auto c = static_cast<std::size_t>(label);
  double count = 0.0;
  if (const auto idx = vocab_index(token)) {
    count = static_cast<double>(counts_[c][*idx]);
  }
  return (count + smoothing_) /
         (static_cast<double>(token_totals_[c]) +
          smoothing_ * static_cast<double>(vocab_.size()));
}

std::array<double, kNumLabels> BowModel::log_scores(const std::string& text) const {
  const auto tokens = text::tokenize(text);
  std::array<double, kNumLabels> scores{};
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (docs_[c] == 0) {
      scores[c] = -std::numeric_limits<double>::infinity();
      continue;
    }
    double score = std::log(static_cast<double>(docs_[c]) / static_cast<double>(total_docs_));
    const double denom = static_cast<double>(token_totals_[c]) +
                         smoothing_ * static_cast<double>(vocab_.size());
    for (const auto& token : tokens) {
      double count = 0.0;
      if (const auto idx = vocab_index(token)) {
        count = static_cast<double>(counts_[c][*idx]);
      }
      score += std::log((count + smoothing_) / denom);
    }
    scores[c] = score;
  }
  return scores;
}

BowModel::Prediction BowModel::predict(const std::string& text) const {
  const auto scores = log_scores(text);
  Prediction out;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  bool any = false;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (!std::isfinite(scores[c])) continue;
    if (!any || scores[c] > best) {
      best = scores[c];
      best_index = c;
      any = true;
    }
  }
  out.label = kLabels[best_index];
  double norm = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    if (std::isfinite(scores[c])) {
      out.posterior[c] = std::exp(scores[c] - best);
      norm += out.posterior[c];
    }
  }
  for (auto& p : out.posterior) p /= norm;
  return out;
}

ConfusionMatrix::ConfusionMatrix(std::size_t k) : k_(k), cells_(k * k, 0) {
  if (k == 0) {
    throw UsageError("confusion matrix needs at least one class");
  }
}

std::size_t& ConfusionMatrix::at(std::size_t gold, std::size_t pred) {
  return cells_[gold * k_ + pred];
}

std::size_t ConfusionMatrix::at(std::size_t gold, std::size_t pred) const {
  return cells_[gold * k_ + pred];
}

std::size_t ConfusionMatrix::total() const {
  std::size_t sum = 0;
  for (const auto cell : cells_) sum += cell;
  return sum;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < k_; ++i) sum += at(i, i);
  return sum;
}

std::size_t ConfusionMatrix::row_sum(std::size_t gold) const {
  std::size_t sum = 0;
  for (std::size_t p = 0; p < k_; ++p) sum += at(gold, p);
  return sum;
}

std::size_t ConfusionMatrix::col_sum(std::size_t pred) const {
  std::size_t sum = 0;
  for (std::size_t g = 0; g < k_; ++g) sum += at(g, pred);
  return sum;
}

ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) {
    throw UsageError("gold and predicted label lists differ in length (" +
                     std::to_string(gold.size()) + " vs " + std::to_string(pred.size()) + ")");
  }
  ConfusionMatrix cm(kNumLabels);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++cm.at(static_cast<std::size_t>(gold[i]), static_cast<std::size_t>(pred[i]));
  }
  return cm;
}

double mcc(const ConfusionMatrix& cm) {
  const auto total = cm.total();
  if (total == 0) {
    throw UsageError("mcc over an empty confusion matrix");
  }
  const double s = static_cast<double>(total);
  const double c = static_cast<double>(cm.trace());
  double tp_dot = 0.0, tt = 0.0, pp = 0.0;
  for (std::size_t k = 0; k < cm.size(); ++k) {
    const double t = static_cast<double>(cm.row_sum(k));
    const double p = static_cast<double>(cm.col_sum(k));
    tp_dot += t * p;
    tt += t * t;
    pp += p * p;
  }
  const double denom = std::sqrt(s * s - pp) * std::sqrt(s * s - tt);
  if (denom <= 0.0) {
    return 0.0;
  }
  return std::clamp((c * s - tp_dot) / denom, -1.0, 1.0);
}

EvalReport metrics(const ConfusionMatrix& cm) {
  const auto total = cm.total();
  if (total == 0) {
    throw UsageError("metrics over an empty confusion matrix");
  }
  EvalReport report;
  report.total = total;
  report.accuracy = static_cast<double>(cm.trace()) / static_cast<double>(total);
  for (std::size_t k = 0; k < cm.size(); ++k) {
    ClassMetrics m;
    m.ns = cm.at(k, k);
    m.support = cm.row_sum(k);
    const auto col = cm.col_sum(k);
    if (col > 0) {
      m.precision = static_cast<double>(m.ns) / static_cast<double>(col);
    } else {
      log::info("class " + std::to_string(k) + " never predicted; precision set to 0");
    }
    if (m.support > 0) {
      m.recall = static_cast<double>(m.ns) / static_cast<double>(m.support);
    } else {
      log::info("class " + std::to_string(k) + " absent from gold; recall set to 0");
    }
    if (m.precision + m.recall > 0.0) {
      m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    report.per_class.push_back(m);
  }
  const double k_count = static_cast<double>(cm.size());
  for (const auto& m : report.per_class) {
    report.macro_precision += m.precision / k_count;
    report.macro_recall += m.recall / k_count;
    report.macro_f1 += m.f1 / k_count;
    const double weight = static_cast<double>(m.support) / static_cast<double>(total);
    report.weighted_precision += weight * m.precision;
    report.weighted_recall += weight * m.recall;
    report.weighted_f1 += weight * m.f1;
  }
  report.mcc = mcc(cm);
  return report;
}

std::vector<Label> predict_batch(const BowModel& model, const LabeledCorpus& corpus,
                                 unsigned parallelism) {
  return parallel_map<Label>(corpus.size(), parallelism, [&](std::size_t i) {
    return model.predict(corpus.documents()[i].text).label;
  });
}

ConfusionMatrix evaluate(const BowModel& model, const LabeledCorpus& corpus,
                         unsigned parallelism) {
  std::vector<Label> gold;
  gold.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) {
    gold.push_back(doc.label);
  }
  return confusion(gold, predict_batch(model, corpus, parallelism));
}

ConfusionMatrix import_external_predictions(const std::filesystem::path& path,
                                            const LabeledCorpus& gold) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open predictions file: " + path.string());
  }
  std::unordered_map<std::string, Label> predicted;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      throw ParseError(path.string() + " line " + std::to_string(line_no) + ": malformed JSON");
    }
    const std::string id = j.value("id", "");
    const std::string label_str = j.value("label", "");
    if (id.empty()) {
      throw ParseError(path.string() + " line " + std::to_string(line_no) + ": missing id");
    }
    const auto label = parse_label(label_str);
    if (!label) {
      throw ParseError(path.string() + " line " + std::to_string(line_no) + ": unknown label \"" +
                       label_str + "\"");
    }
    if (!predicted.emplace(id, *label).second) {
      throw ParseError(path.string() + " line " + std::to_string(line_no) +
                       ": duplicate prediction for id '" + id + "'");
    }
  }
  ConfusionMatrix cm(kNumLabels);
  std::size_t matched = 0;
  for (const auto& doc : gold.documents()) {
    const auto it = predicted.find(doc.id);
    if (it == predicted.end()) {
      throw UsageError("predictions file lacks an entry for id '" + doc.id + "'");
    }
    ++cm.at(static_cast<std::size_t>(doc.label), static_cast<std::size_t>(it->second));
    ++matched;
  }
  if (matched < predicted.size()) {
    log::warn(std::to_string(predicted.size() - matched) +
              " prediction(s) did not match any gold id and were ignored");
  }
  return cm;
}

namespace {

std::string fixed(double value, int places) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  return buf;
}

}  // namespace

std::string render_overall_table(const std::vector<OverallRow>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %6s %6s %6s %6s %6s %7s\n", "Type", "Val-A", "T-P",
                "T-R", "T-F", "T-A", "T-MCC");
  out += line;
  for (const auto& row : rows) {
    const std::string val = row.val_accuracy ? fixed(*row.val_accuracy, 3) : std::string("-");
    std::snprintf(line, sizeof(line), "%-10s %6s %6s %6s %6s %6s %7s\n", row.type.c_str(),
                  val.c_str(), fixed(row.t_p, 2).c_str(), fixed(row.t_r, 2).c_str(),
                  fixed(row.t_f, 2).c_str(), fixed(row.t_a, 2).c_str(),
                  fixed(row.t_mcc, 3).c_str());
    out += line;
  }
  return out;
}

std::string render_class_table(const std::vector<ClassTableEntry>& entries) {
  if (entries.empty()) return {};
  for (const auto& entry : entries) {
    if (entry.per_class.size() != kNumLabels) {
      throw UsageError("class table rows must cover all four classes");
    }
  }
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %-10s %6s %6s %6s %5s %7s\n", "Class", "Type", "T-P",
                "T-R", "T-F", "NS", "INS");
  out += line;
  const auto& baseline = entries.front();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& m = entries[e].per_class[c];
      std::string ins = "-";
      if (e > 0) {
        const auto& base = baseline.per_class[c];
        if (base.support > 0) {
          const double delta = static_cast<double>(m.ns) - static_cast<double>(base.ns);
          ins = fixed(100.0 * delta / static_cast<double>(base.support), 2);
        }
      }
      std::snprintf(line, sizeof(line), "%-6s %-10s %6s %6s %6s %5zu %7s\n",
                    e == 0 ? std::string(label_code(kLabels[c])).c_str() : "",
                    entries[e].type.c_str(), fixed(m.precision, 2).c_str(),
                    fixed(m.recall, 2).c_str(), fixed(m.f1, 2).c_str(), m.ns, ins.c_str());
      out += line;
    }
  }
  return out;
}

}  // namespace wdaug::clf
