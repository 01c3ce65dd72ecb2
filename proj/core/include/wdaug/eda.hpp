#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdaug/balance.hpp"
#include "wdaug/lexicon.hpp"
#include "wdaug/rng.hpp"

namespace wdaug::eda {

struct EdaParams {
  double alpha = 0.1;   // per-operation intensity; n = max(1, ceil(alpha*len)), deletion p = alpha
  std::size_t n_aug = 1;
  std::uint64_t seed = 0;
};

// Replaces at most n tokens that have lexicon entries by a random synonym.
// Output length equals input length.
std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             std::size_t n, const SynonymLexicon& lexicon,
                                             rng::Engine& rng);

// Inserts up to n synonyms of random input tokens at random positions. The
// original tokens keep their relative order.
std::vector<std::string> random_insertion(const std::vector<std::string>& tokens, std::size_t n,
                                          const SynonymLexicon& lexicon, rng::Engine& rng);

// n transpositions of random position pairs; token multiset preserved.
std::vector<std::string> random_swap(const std::vector<std::string>& tokens, std::size_t n,
                                     rng::Engine& rng);

// Keeps each token with probability 1-p. If everything would be deleted,
// returns a single random token of the input instead of an empty list.
std::vector<std::string> random_deletion(const std::vector<std::string>& tokens, double p,
                                         rng::Engine& rng);

// Produces exactly params.n_aug variants, each via one of the four
// operations chosen uniformly under the seed. Variants that differ from the
// input are preferred (a few re-draws before accepting an identical one).
std::vector<std::string> eda_augment(const std::string& input, const EdaParams& params,
                                     const SynonymLexicon& lexicon);

class EdaAugmenter : public Augmenter {
 public:
  EdaAugmenter(SynonymLexicon lexicon, double alpha)
      : lexicon_(std::move(lexicon)), alpha_(alpha) {}

  Source method() const override { return Source::Eda; }
  AugmentResult augment(const LabeledDocument& parent, std::uint64_t seed) override;

 private:
  SynonymLexicon lexicon_;
  double alpha_;
};

}  // namespace wdaug::eda
