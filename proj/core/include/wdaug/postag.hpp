#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wdaug::pos {

// Coarse universal tagset.
enum class Tag {
  Noun,
  Verb,
  Adj,
  Adv,
  Pron,
  Det,
  Adp,
  Num,
  Conj,
  Part,
  Punct,
  X,
};

std::string_view tag_name(Tag tag);

// Assigns one tag per token; implementations must be deterministic.
class PosTagger {
 public:
  virtual ~PosTagger() = default;
  virtual std::vector<Tag> tag(const std::vector<std::string>& tokens) = 0;
};

// Offline tagger: closed-class lexicon first, then suffix rules, defaulting
// to Noun. Expects lowercased tokens (as produced by text::tokenize).
class BuiltinPosTagger : public PosTagger {
 public:
  std::vector<Tag> tag(const std::vector<std::string>& tokens) override;

  // Single-token rule, exposed for tests.
  static Tag tag_token(const std::string& token);
};

}  // namespace wdaug::pos
