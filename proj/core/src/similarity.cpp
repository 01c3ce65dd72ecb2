#include "wdaug/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/log.hpp"
#include "wdaug/parallel.hpp"
#include "wdaug/text.hpp"

namespace wdaug::sim {

namespace {

RougeScore from_counts(double overlap, double candidate_total, double reference_total) {
  RougeScore score;
  if (candidate_total <= 0.0 || reference_total <= 0.0) {
    return score;
  }
  score.precision = overlap / candidate_total;
  score.recall = overlap / reference_total;
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

std::string join_gram(const std::vector<std::string>& tokens, std::size_t start, int n) {
  std::string gram = tokens[start];
  for (int k = 1; k < n; ++k) {
    gram += '\x1f';
    gram += tokens[start + static_cast<std::size_t>(k)];
  }
  return gram;
}

}  // namespace

RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n) {
  if (n != 1 && n != 2) {
    throw UsageError("rouge_n supports n = 1 or 2, got " + std::to_string(n));
  }
  const std::size_t un = static_cast<std::size_t>(n);
  if (candidate.size() < un || reference.size() < un) {
    return RougeScore{};
  }
  std::unordered_map<std::string, std::size_t> reference_counts;
  for (std::size_t i = 0; i + un <= reference.size(); ++i) {
    ++reference_counts[join_gram(reference, i, n)];
  }
  std::size_t overlap = 0;
  for (std::size_t i = 0; i + un <= candidate.size(); ++i) {
    const auto it = reference_counts.find(join_gram(candidate, i, n));
    if (it != reference_counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  return from_counts(static_cast<double>(overlap),
                     static_cast<double>(candidate.size() - un + 1),
                     static_cast<double>(reference.size() - un + 1));
}

RougeScore rouge_l(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) {
    return RougeScore{};
  }
  // Two-row LCS table: O(min extra space) is unnecessary at desk scale but
  // O(n*m) time is required anyway.
  std::vector<std::size_t> prev(reference.size() + 1, 0);
  std::vector<std::size_t> curr(reference.size() + 1, 0);
  for (std::size_t i = 1; i <= candidate.size(); ++i) {
    for (std::size_t j = 1; j <= reference.size(); ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  return from_counts(static_cast<double>(prev[reference.size()]),
                     static_cast<double>(candidate.size()),
                     static_cast<double>(reference.size()));
}

double cosine(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) {
    throw UsageError("cosine: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu <= 0.0 || nv <= 0.0) {
    throw UsageError("cosine: zero-norm vector");
  }
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

double pos_overlap(const std::string& a, const std::string& b, pos::PosTagger& tagger) {
  const auto tokens_a = text::tokenize(a);
  const auto tokens_b = text::tokenize(b);
  if (tokens_a.empty() && tokens_b.empty()) return 1.0;
  if (tokens_a.empty() || tokens_b.empty()) return 0.0;
  const auto tags_a = tagger.tag(tokens_a);
  const auto tags_b = tagger.tag(tokens_b);
  const std::set<pos::Tag> set_a(tags_a.begin(), tags_a.end());
  const std::set<pos::Tag> set_b(tags_b.begin(), tags_b.end());
  std::size_t intersection = 0;
  for (const auto tag : set_a) {
    if (set_b.count(tag)) ++intersection;
  }
  const std::size_t unions = set_a.size() + set_b.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

std::vector<DocumentPair> make_pairs(const LabeledCorpus& corpus) {
  std::unordered_map<std::string, const LabeledDocument*> by_id;
  for (const auto& doc : corpus.documents()) {
    by_id.emplace(doc.id, &doc);
  }
  std::vector<DocumentPair> pairs;
  for (const auto& doc : corpus.documents()) {
    if (doc.source == Source::Original) continue;
    const auto it = by_id.find(doc.parent_id);
    if (it == by_id.end()) {
      throw UsageError("record '" + doc.id + "' references missing parent '" + doc.parent_id +
                       "'");
    }
    pairs.push_back(DocumentPair{*it->second, doc});
  }
  return pairs;
}

namespace {

SimilarityRow compare_pair(const DocumentPair& pair, const std::string& kind,
                           const std::string& original_side, const std::string& augmented_side,
                           const std::vector<NamedProvider>& providers,
                           pos::PosTagger& tagger) {
  SimilarityRow row;
  row.pair_id = pair.augmented.id;
  row.method = std::string(source_name(pair.augmented.source));
  row.kind = kind;
  const auto candidate = text::tokenize(augmented_side);
  const auto reference = text::tokenize(original_side);
  row.rouge1 = rouge_n(candidate, reference, 1);
  row.rouge2 = rouge_n(candidate, reference, 2);
  row.rougeL = rouge_l(candidate, reference);
  row.overlap = pos_overlap(original_side, augmented_side, tagger);
  row.cosines.reserve(providers.size());
  for (const auto& named : providers) {
    try {
      const auto u = named.provider->embed(original_side);
      const auto v = named.provider->embed(augmented_side);
      row.cosines.emplace_back(cosine(u, v));
    } catch (const Error& e) {
      log::warn("embedding provider '" + named.name + "' failed for pair '" + row.pair_id +
                "': " + e.what());
      row.cosines.emplace_back(std::nullopt);
    }
  }
  return row;
}

}  // namespace

SimilarityReport similarity_report(const std::vector<DocumentPair>& pairs,
                                   const std::vector<NamedProvider>& providers,
                                   pos::PosTagger& tagger, unsigned parallelism) {
  if (pairs.empty()) {
    throw UsageError("nothing to compare: no augmented records paired with originals");
  }
  SimilarityReport report;
  for (const auto& named : providers) {
    report.provider_names.push_back(named.name);
  }

  const auto row_groups = parallel_map<std::vector<SimilarityRow>>(
      pairs.size(), parallelism, [&](std::size_t i) {
        const auto& pair = pairs[i];
        std::vector<SimilarityRow> rows;
        rows.push_back(compare_pair(pair, "text", pair.original.text, pair.augmented.text,
                                    providers, tagger));
        if (!pair.original.explanation.empty() && !pair.augmented.explanation.empty()) {
          rows.push_back(compare_pair(pair, "explanation", pair.original.explanation,
                                      pair.augmented.explanation, providers, tagger));
        }
        return rows;
      });
  for (const auto& group : row_groups) {
    report.rows.insert(report.rows.end(), group.begin(), group.end());
  }

  // Group means by (method, kind); map keeps the output order stable.
  struct Accumulator {
    std::size_t pairs = 0;
    double rouge1 = 0.0, rouge2 = 0.0, rougeL = 0.0, overlap = 0.0;
    std::vector<double> cosine_sums;
    std::vector<std::size_t> cosine_counts;
  };
  std::map<std::pair<std::string, std::string>, Accumulator> groups;
  for (const auto& row : report.rows) {
    auto& acc = groups[{row.method, row.kind}];
    if (acc.cosine_sums.empty()) {
      acc.cosine_sums.assign(providers.size(), 0.0);
      acc.cosine_counts.assign(providers.size(), 0);
    }
    ++acc.pairs;
    acc.rouge1 += row.rouge1.f1;
    acc.rouge2 += row.rouge2.f1;
    acc.rougeL += row.rougeL.f1;
    acc.overlap += row.overlap;
    for (std::size_t p = 0; p < providers.size(); ++p) {
      if (row.cosines[p].has_value()) {
        acc.cosine_sums[p] += *row.cosines[p];
        ++acc.cosine_counts[p];
      }
    }
  }
  for (const auto& [key, acc] : groups) {
    MethodMeans means;
    means.method = key.first;
    means.kind = key.second;
    means.pairs = acc.pairs;
    const double denom = static_cast<double>(acc.pairs);
    means.rouge1_f1 = acc.rouge1 / denom;
    means.rouge2_f1 = acc.rouge2 / denom;
    means.rougeL_f1 = acc.rougeL / denom;
    means.overlap = acc.overlap / denom;
    for (std::size_t p = 0; p < providers.size(); ++p) {
      if (acc.cosine_counts[p] > 0) {
        means.cosines.emplace_back(acc.cosine_sums[p] / static_cast<double>(acc.cosine_counts[p]));
      } else {
        means.cosines.emplace_back(std::nullopt);
      }
    }
    report.means.push_back(std::move(means));
  }
  return report;
}

namespace {

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_report_csv(const SimilarityReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw UsageError("cannot write " + path.string());
  }
  out << "pair_id,method,kind,rouge1_f1,rouge2_f1,rougeL_f1,pos_overlap";
  for (const auto& name : report.provider_names) {
    out << ",cosine_" << name;
  }
  out << '\n';
  for (const auto& row : report.rows) {
    out << csv_escape(row.pair_id) << ',' << row.method << ',' << row.kind << ','
        << format_value(row.rouge1.f1) << ',' << format_value(row.rouge2.f1) << ','
        << format_value(row.rougeL.f1) << ',' << format_value(row.overlap);
    for (const auto& cell : row.cosines) {
      out << ',';
      if (cell.has_value()) out << format_value(*cell);
    }
    out << '\n';
  }
  if (!out) {
    throw UsageError("failed writing " + path.string());
  }
}

void write_report_summary(const SimilarityReport& report, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["providers"] = report.provider_names;
  j["rows"] = report.rows.size();
  auto& means = j["means"];
  means = nlohmann::ordered_json::array();
  for (const auto& m : report.means) {
    nlohmann::ordered_json entry;
    entry["method"] = m.method;
    entry["kind"] = m.kind;
    entry["pairs"] = m.pairs;
    entry["rouge1_f1"] = m.rouge1_f1;
    entry["rouge2_f1"] = m.rouge2_f1;
    entry["rougeL_f1"] = m.rougeL_f1;
    entry["pos_overlap"] = m.overlap;
    auto& cos = entry["cosine"];
    for (std::size_t p = 0; p < report.provider_names.size(); ++p) {
      if (m.cosines[p].has_value()) {
        cos[report.provider_names[p]] = *m.cosines[p];
      } else {
        cos[report.provider_names[p]] = nullptr;
      }
    }
    means.push_back(std::move(entry));
  }
  std::ofstream out(path);
  if (!out) {
    throw UsageError("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw UsageError("failed writing " + path.string());
  }
}

std::string render_report(const SimilarityReport& report) {
  std::string out;
  char line[256];
  for (const auto& m : report.means) {
    std::snprintf(line, sizeof(line), "%s/%s (%zu pairs)\n", m.method.c_str(), m.kind.c_str(),
                  m.pairs);
    out += line;
    std::snprintf(line, sizeof(line),
                  "  ROUGE-1 %.4f  ROUGE-2 %.4f  ROUGE-L %.4f  POS overlap %.4f\n", m.rouge1_f1,
                  m.rouge2_f1, m.rougeL_f1, m.overlap);
    out += line;
    for (std::size_t p = 0; p < report.provider_names.size(); ++p) {
      if (m.cosines[p].has_value()) {
        std::snprintf(line, sizeof(line), "  cosine[%s] %.4f\n", report.provider_names[p].c_str(),
                      *m.cosines[p]);
      } else {
        std::snprintf(line, sizeof(line), "  cosine[%s] (no data)\n",
                      report.provider_names[p].c_str());
      }
      out += line;
    }
  }
  return out;
}

}  // namespace wdaug::sim
