#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace wdaug {

// Lowercase word -> synonyms. Lookup of an absent word yields an empty list.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(std::unordered_map<std::string, std::vector<std::string>> entries);

  // JSON file: {"word": ["synonym", ...], ...}
  static SynonymLexicon load(const std::filesystem::path& path);

  const std::vector<std::string>& synonyms(const std::string& word) const;
  bool has(const std::string& word) const { return !synonyms(word).empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

}  // namespace wdaug
