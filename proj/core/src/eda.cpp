#include "wdaug/eda.hpp"

#include <cmath>

#include "wdaug/error.hpp"
#include "wdaug/text.hpp"

namespace wdaug::eda {
namespace {

std::size_t intensity_count(double alpha, std::size_t len) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(
                                      std::ceil(alpha * static_cast<double>(len))));
}

}  // namespace

std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             std::size_t n, const SynonymLexicon& lexicon,
                                             rng::Engine& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (lexicon.has(tokens[i])) candidates.push_back(i);
  }
  if (candidates.empty() || n == 0) return tokens;
  rng.shuffle(candidates);
  auto out = tokens;
  const std::size_t replace = std::min(n, candidates.size());
  for (std::size_t k = 0; k < replace; ++k) {
    const std::size_t pos = candidates[k];
    const auto& syns = lexicon.synonyms(tokens[pos]);
    out[pos] = syns[rng.bounded(syns.size())];
  }
  return out;
}

std::vector<std::string> random_insertion(const std::vector<std::string>& tokens, std::size_t n,
                                          const SynonymLexicon& lexicon, rng::Engine& rng) {
  auto out = tokens;
  if (tokens.empty()) return out;
  for (std::size_t k = 0; k < n; ++k) {
    // a few tries to hit a token that has synonyms, as in the EDA reference
    for (int attempt = 0; attempt < 10; ++attempt) {
      const auto& word = tokens[rng.bounded(tokens.size())];
      const auto& syns = lexicon.synonyms(word);
      if (syns.empty()) continue;
      const auto& synonym = syns[rng.bounded(syns.size())];
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(rng.bounded(out.size() + 1)), synonym);
      break;
    }
  }
  return out;
}

std::vector<std::string> random_swap(const std::vector<std::string>& tokens, std::size_t n,
                                     rng::Engine& rng) {
  auto out = tokens;
  if (out.size() < 2) return out;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = rng.bounded(out.size());
    std::size_t j = rng.bounded(out.size() - 1);
    if (j >= i) ++j;
    std::swap(out[i], out[j]);
  }
  return out;
}

std::vector<std::string> random_deletion(const std::vector<std::string>& tokens, double p,
                                         rng::Engine& rng) {
  if (p < 0.0 || p > 1.0) throw UsageError("deletion probability must lie in [0, 1]");
  if (tokens.empty()) return tokens;
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (rng.uniform01() >= p) out.push_back(tok);
  }
  if (out.empty()) {
    // EDA convention: never return an empty sentence
    out.push_back(tokens[rng.bounded(tokens.size())]);
  }
  return out;
}

std::vector<std::string> eda_augment(const std::string& input, const EdaParams& params,
                                     const SynonymLexicon& lexicon) {
  if (params.alpha < 0.0 || params.alpha > 1.0) {
    throw UsageError("eda alpha must lie in [0, 1]");
  }
  if (params.n_aug < 1) {
    throw UsageError("eda n_aug must be at least 1");
  }
  const auto tokens = text::tokenize(input);
  std::vector<std::string> variants;
  variants.reserve(params.n_aug);
  rng::Engine rng(params.seed);
  for (std::size_t v = 0; v < params.n_aug; ++v) {
    if (tokens.empty()) {
      // nothing to perturb (e.g. punctuation-only input)
      variants.push_back(text::trim(input));
      continue;
    }
    const std::size_t n = intensity_count(params.alpha, tokens.size());
    std::string variant;
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<std::string> out;
      switch (rng.bounded(4)) {
        case 0:
          out = synonym_replacement(tokens, n, lexicon, rng);
          break;
        case 1:
          out = random_insertion(tokens, n, lexicon, rng);
          break;
        case 2:
          out = random_swap(tokens, n, rng);
          break;
        default:
          out = random_deletion(tokens, params.alpha, rng);
          break;
      }
      variant = text::detokenize(out);
      if (out != tokens) break;
    }
    variants.push_back(std::move(variant));
  }
  return variants;
}

AugmentResult EdaAugmenter::augment(const LabeledDocument& parent, std::uint64_t seed) {
  AugmentResult result;
  EdaParams params{alpha_, 1, rng::derive_seed(seed, "eda/text")};
  result.text = eda_augment(parent.text, params, lexicon_).front();
  if (!parent.explanation.empty()) {
    EdaParams exp_params{alpha_, 1, rng::derive_seed(seed, "eda/explanation")};
    result.explanation = eda_augment(parent.explanation, exp_params, lexicon_).front();
  }
  return result;
}

}  // namespace wdaug::eda
