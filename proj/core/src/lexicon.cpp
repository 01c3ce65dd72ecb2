#include "wdaug/lexicon.hpp"

#include <fstream>

#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/text.hpp"

namespace wdaug {

using nlohmann::json;

SynonymLexicon::SynonymLexicon(std::unordered_map<std::string, std::vector<std::string>> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second.erase(std::remove_if(it->second.begin(), it->second.end(),
                                    [](const std::string& s) { return s.empty(); }),
                     it->second.end());
    if (it->second.empty()) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open lexicon file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("lexicon " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("lexicon " + path.string() + ": expected a JSON object");
  }
  std::unordered_map<std::string, std::vector<std::string>> entries;
  for (const auto& [word, syns] : j.items()) {
    if (!syns.is_array()) {
      throw ParseError("lexicon " + path.string() + ": entry '" + word + "' is not an array");
    }
    std::vector<std::string> list;
    for (const auto& s : syns) {
      if (!s.is_string()) {
        throw ParseError("lexicon " + path.string() + ": entry '" + word +
                         "' contains a non-string synonym");
      }
      list.push_back(s.get<std::string>());
    }
    entries[text::to_lower_ascii(word)] = std::move(list);
  }
  return SynonymLexicon(std::move(entries));
}

const std::vector<std::string>& SynonymLexicon::synonyms(const std::string& word) const {
  static const std::vector<std::string> kEmpty;
  const auto it = entries_.find(word);
  return it == entries_.end() ? kEmpty : it->second;
}

}  // namespace wdaug
