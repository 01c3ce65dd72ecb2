#include "wdaug/postag.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace wdaug::pos {

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::Noun: return "NOUN";
    case Tag::Verb: return "VERB";
    case Tag::Adj: return "ADJ";
    case Tag::Adv: return "ADV";
    case Tag::Pron: return "PRON";
    case Tag::Det: return "DET";
    case Tag::Adp: return "ADP";
    case Tag::Num: return "NUM";
    case Tag::Conj: return "CONJ";
    case Tag::Part: return "PART";
    case Tag::Punct: return "PUNCT";
    case Tag::X: return "X";
  }
  return "X";
}

namespace {

const std::unordered_map<std::string, Tag>& lexicon() {
  static const std::unordered_map<std::string, Tag> kLexicon = [] {
    std::unordered_map<std::string, Tag> m;
    auto add = [&m](Tag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) m.emplace(w, tag);
    };
    add(Tag::Det, {"a",     "an",      "the",   "this", "that",  "these", "those",
                   "each",  "every",   "either", "neither", "some", "any", "no",
                   "all",   "both",    "several", "many", "much", "few",  "other",
                   "another", "such",  "what",  "which", "whose"});
    add(Tag::Pron, {"i",      "you",    "he",      "she",     "it",       "we",
                    "they",   "me",     "him",     "her",     "us",       "them",
                    "my",     "your",   "his",     "its",     "our",      "their",
                    "mine",   "yours",  "hers",    "ours",    "theirs",   "myself",
                    "yourself", "himself", "herself", "itself", "ourselves",
                    "themselves", "who", "whom",   "someone", "anyone",   "everyone",
                    "nobody", "something", "anything", "everything", "nothing"});
    add(Tag::Adp, {"in",      "on",     "at",      "by",      "for",     "with",
                   "about",   "against", "between", "into",   "through", "during",
                   "before",  "after",  "above",   "below",   "to",      "from",
                   "up",      "down",   "over",    "under",   "of",      "off",
                   "near",    "across", "behind",  "beyond",  "within",  "without",
                   "along",   "around", "among",   "upon",    "toward",  "towards",
                   "per",     "via",    "since",   "until",   "despite", "except",
                   "beside",  "onto",   "inside",  "outside"});
    add(Tag::Conj, {"and", "or", "but", "nor", "yet", "so", "because", "although",
                    "though", "unless", "whereas", "while", "whether", "if", "than"});
    add(Tag::Part, {"not"});
    add(Tag::Verb, {"am",    "is",     "are",    "was",    "were",   "be",     "been",
                    "being", "do",     "does",   "did",    "done",   "have",   "has",
                    "had",   "having", "can",    "could",  "will",   "would",  "shall",
                    "should", "may",   "might",  "must",   "go",     "goes",   "went",
                    "gone",  "get",    "gets",   "got",    "make",   "makes",  "made",
                    "say",   "says",   "said",   "see",    "sees",   "saw",    "seen",
                    "know",  "knows",  "knew",   "known",  "take",   "takes",  "took",
                    "taken", "come",   "comes",  "came",   "give",   "gives",  "gave",
                    "given", "find",   "finds",  "found",  "tell",   "tells",  "told",
                    "ask",   "asks",   "asked",  "feel",   "feels",  "felt",   "keep",
                    "keeps", "kept",   "let",    "lets",   "put",    "puts",   "mean",
                    "means", "meant",  "run",    "runs",   "ran",    "eat",    "eats",
                    "ate",   "sit",    "sits",   "sat",    "stand",  "stands", "stood",
                    "hear",  "hears",  "heard",  "bring",  "brings", "brought", "read",
                    "reads", "write",  "writes", "wrote",  "written", "pray",  "prays",
                    "seem",  "seems",  "become", "becomes", "became", "leave", "leaves",
                    "left",  "lose",   "loses",  "lost",   "pay",    "pays",   "paid",
                    "meet",  "meets",  "met",    "think",  "thinks", "thought"});
    add(Tag::Adv, {"very",   "too",    "also",   "just",   "now",    "then",
                   "here",   "there",  "never",  "always", "often",  "sometimes",
                   "soon",   "already", "again", "still",  "almost", "quite",
                   "rather", "really", "perhaps", "maybe", "well",   "even",
                   "ever",   "away",   "back",   "today",  "tomorrow", "yesterday",
                   "together", "instead", "later"});
    add(Tag::Num, {"zero", "one",  "two",   "three", "four",  "five",    "six",
                   "seven", "eight", "nine", "ten",  "hundred", "thousand", "million"});
    return m;
  }();
  return kLexicon;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Tag BuiltinPosTagger::tag_token(const std::string& token) {
  if (token.empty()) return Tag::X;
  const bool all_punct = std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::ispunct(c) != 0;
  });
  if (all_punct) return Tag::Punct;
  const bool has_digit = std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (has_digit) {
    const bool numeric = std::all_of(token.begin(), token.end(), [](unsigned char c) {
      return std::isdigit(c) != 0 || c == '.' || c == ',' || c == '-' || c == '%' || c == '/';
    });
    if (numeric) return Tag::Num;
    return Tag::X;
  }
  const auto& lex = lexicon();
  if (const auto it = lex.find(token); it != lex.end()) {
    return it->second;
  }
  if (token.size() >= 4) {
    if (ends_with(token, "ly")) return Tag::Adv;
    if (ends_with(token, "ful") || ends_with(token, "ous") || ends_with(token, "ive") ||
        ends_with(token, "able") || ends_with(token, "ible") || ends_with(token, "ic") ||
        ends_with(token, "ish") || ends_with(token, "less")) {
      return Tag::Adj;
    }
    if (ends_with(token, "ing") || ends_with(token, "ed") || ends_with(token, "ize") ||
        ends_with(token, "ise") || ends_with(token, "ify")) {
      return Tag::Verb;
    }
    if (token.size() >= 5 && ends_with(token, "est")) return Tag::Adj;
    if (ends_with(token, "tion") || ends_with(token, "sion") || ends_with(token, "ment") ||
        ends_with(token, "ness") || ends_with(token, "ity") || ends_with(token, "ship") ||
        ends_with(token, "hood") || ends_with(token, "ence") || ends_with(token, "ance")) {
      return Tag::Noun;
    }
  }
  return Tag::Noun;
}

std::vector<Tag> BuiltinPosTagger::tag(const std::vector<std::string>& tokens) {
  std::vector<Tag> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) {
    tags.push_back(tag_token(token));
  }
  return tags;
}

}  // namespace wdaug::pos
