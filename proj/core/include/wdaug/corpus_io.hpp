#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>

#include "wdaug/document.hpp"

namespace wdaug {

// Reads a JSONL corpus. One record per line:
//   {"id": "...", "text": "...", "explanation": "...", "label": "PA|IVA|SA|SEA",
//    "source": "original|eda|bt|llm", "parent_id": "..."}
// explanation, source (default "original") and parent_id are optional.
// Errors name the offending line; empty-text records are rejected.
LabeledCorpus load_corpus(const std::filesystem::path& path);

// Writes JSONL preserving document order. load_corpus(write_corpus(c)) == c.
void write_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path);

struct SplitResult {
  LabeledCorpus train;
  LabeledCorpus test;
};

// Carves exactly `per_class_test` seeded-random records of each class into
// the test side; both sides keep corpus order. Requires an original-only
// corpus with strictly more than `per_class_test` records per class.
SplitResult stratified_split(const LabeledCorpus& corpus, std::size_t per_class_test,
                             std::uint64_t seed);

// Fractional carve-out used for the validation set. Stratified mode takes
// floor(fraction * count) per class; uniform mode floor(fraction * total)
// over the whole corpus. Returns (kept, carved).
SplitResult fraction_split(const LabeledCorpus& corpus, double fraction, bool stratified,
                           std::uint64_t seed);

}  // namespace wdaug
