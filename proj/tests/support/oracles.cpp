#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace wdaug::testing {

namespace {

bool same_gram(const std::vector<std::string>& a, std::size_t i, const std::vector<std::string>& b,
               std::size_t j, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[i + k] != b[j + k]) return false;
  }
  return true;
}

std::size_t count_gram(const std::vector<std::string>& seq, const std::vector<std::string>& gram_src,
                       std::size_t gram_at, std::size_t n) {
  if (seq.size() < n) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) {
    if (same_gram(seq, i, gram_src, gram_at, n)) ++count;
  }
  return count;
}

sim::RougeScore score_from(double overlap, double cand_total, double ref_total) {
  sim::RougeScore s;
  if (cand_total <= 0.0 || ref_total <= 0.0) return s;
  s.precision = overlap / cand_total;
  s.recall = overlap / ref_total;
  if (s.precision + s.recall > 0.0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

}  // namespace

sim::RougeScore oracle_rouge_n(const std::vector<std::string>& candidate,
                               const std::vector<std::string>& reference, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  if (candidate.size() < un || reference.size() < un) return {};
  // Clipped overlap = sum over *distinct* candidate n-grams of
  // min(count in candidate, count in reference). Distinctness is enforced
  // by only scoring the first occurrence of each gram.
  std::size_t overlap = 0;
  for (std::size_t i = 0; i + un <= candidate.size(); ++i) {
    bool seen_before = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (same_gram(candidate, j, candidate, i, un)) {
        seen_before = true;
        break;
      }
    }
    if (seen_before) continue;
    const std::size_t in_cand = count_gram(candidate, candidate, i, un);
    const std::size_t in_ref = count_gram(reference, candidate, i, un);
    overlap += std::min(in_cand, in_ref);
  }
  return score_from(static_cast<double>(overlap),
                    static_cast<double>(candidate.size() - un + 1),
                    static_cast<double>(reference.size() - un + 1));
}

sim::RougeScore oracle_rouge_l(const std::vector<std::string>& candidate,
                               const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return {};
  const std::size_t n = candidate.size();
  const std::size_t m = reference.size();
  std::vector<std::vector<std::size_t>> dp(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        dp[i][j] = dp[i - 1][j - 1] + 1;
      } else {
        dp[i][j] = std::max(dp[i - 1][j], dp[i][j - 1]);
      }
    }
  }
  return score_from(static_cast<double>(dp[n][m]), static_cast<double>(n),
                    static_cast<double>(m));
}

double oracle_gorodkin_mcc(const std::vector<std::vector<long long>>& m) {
  const std::size_t k = m.size();
  // cov(X,Y) = sum_k sum_l sum_g  C_kk*C_lg - C_kl*C_gk
  long double cov_xy = 0.0L;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t g = 0; g < k; ++g) {
        cov_xy += static_cast<long double>(m[a][a]) * static_cast<long double>(m[l][g]);
        cov_xy -= static_cast<long double>(m[a][l]) * static_cast<long double>(m[g][a]);
      }
    }
  }
  // cov(X,X) = sum_k [ (sum_l C_kl) * (sum_{k'!=k} sum_l' C_k'l') ]
  long double cov_xx = 0.0L;
  long double cov_yy = 0.0L;
  for (std::size_t a = 0; a < k; ++a) {
    long double row_a = 0.0L;
    long double col_a = 0.0L;
    long double other_rows = 0.0L;
    long double other_cols = 0.0L;
    for (std::size_t l = 0; l < k; ++l) {
      row_a += static_cast<long double>(m[a][l]);
      col_a += static_cast<long double>(m[l][a]);
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      for (std::size_t l = 0; l < k; ++l) {
        other_rows += static_cast<long double>(m[b][l]);
        other_cols += static_cast<long double>(m[l][b]);
      }
    }
    cov_xx += row_a * other_rows;
    cov_yy += col_a * other_cols;
  }
  if (cov_xx <= 0.0L || cov_yy <= 0.0L) return 0.0;
  const long double denom = std::sqrt(cov_xx) * std::sqrt(cov_yy);
  if (denom == 0.0L) return 0.0;
  return static_cast<double>(cov_xy / denom);
}

bool oracle_binary_mcc(long long tp, long long fn, long long fp, long long tn, double* out) {
  const long double d1 = static_cast<long double>(tp + fp);
  const long double d2 = static_cast<long double>(tp + fn);
  const long double d3 = static_cast<long double>(tn + fp);
  const long double d4 = static_cast<long double>(tn + fn);
  const long double denom = std::sqrt(d1 * d2 * d3 * d4);
  if (denom == 0.0L) return false;
  const long double num = static_cast<long double>(tp) * static_cast<long double>(tn) -
                          static_cast<long double>(fp) * static_cast<long double>(fn);
  *out = static_cast<double>(num / denom);
  return true;
}

bool is_subsequence(const std::vector<std::string>& sub, const std::vector<std::string>& seq) {
  std::size_t i = 0;
  for (const auto& token : seq) {
    if (i < sub.size() && sub[i] == token) ++i;
  }
  return i == sub.size();
}

bool multiset_equal(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool multiset_contains(const std::vector<std::string>& sub,
                       const std::vector<std::string>& super) {
  std::vector<std::string> a = sub;
  std::vector<std::string> b = super;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> random_tokens(rng::Engine& engine, std::size_t min_len,
                                       std::size_t max_len, std::size_t vocab) {
  const std::size_t len = min_len + engine.bounded(max_len - min_len + 1);
  std::vector<std::string> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back("t" + std::to_string(engine.bounded(vocab)));
  }
  return out;
}

}  // namespace wdaug::testing
