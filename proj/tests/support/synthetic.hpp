#pragma once

// Deterministic synthetic 4-class corpus: each class draws from its own
// keyword pool, every document also carries shared noise words, and a small
// leak probability sprinkles in off-class keywords so the classes are
// separable but not trivially so. Used by the offline-benefit experiment
// and by pipeline tests that need realistic imbalanced inputs.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wdaug/document.hpp"

namespace wdaug::testing {

struct SynthParams {
  std::array<int, 4> counts{400, 200, 100, 100};  // PA, IVA, SA, SEA
  int keywords_per_class = 14;
  int noise_words = 80;
  int min_len = 8;
  int max_len = 14;
  // Tuned so the imbalanced-trained classifier has real minority-class
  // headroom: enough leak and noise that sparse classes lose ties to the
  // majority prior, which is what balancing then repairs.
  double p_keyword = 0.24;  // own-class keyword
  double p_leak = 0.14;     // keyword of a random other class
  std::uint64_t seed = 2024;
  std::string id_prefix = "syn";
};

LabeledCorpus make_synthetic_corpus(const SynthParams& params);

// Every pool word maps to one synthetic synonym (word + "x"), so EDA's
// synonym operations stay inside the owning class's vocabulary.
std::map<std::string, std::vector<std::string>> make_synthetic_lexicon(const SynthParams& params);

}  // namespace wdaug::testing
