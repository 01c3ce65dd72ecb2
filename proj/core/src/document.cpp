#include "wdaug/document.hpp"

#include <unordered_set>

#include "wdaug/error.hpp"

namespace wdaug {

LabeledCorpus::LabeledCorpus(std::vector<LabeledDocument> documents)
    : documents_(std::move(documents)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(documents_.size());
  for (const auto& doc : documents_) {
    if (doc.id.empty()) {
      throw ParseError("document with empty id");
    }
    if (doc.text.empty()) {
      throw ParseError("document '" + doc.id + "' has empty text");
    }
    const bool has_parent = !doc.parent_id.empty();
    if ((doc.source == Source::Original) == has_parent) {
      throw ParseError("document '" + doc.id + "': source '" +
                       std::string(source_name(doc.source)) +
                       (has_parent ? "' must not have parent_id" : "' requires parent_id"));
    }
    if (!seen.insert(doc.id).second) {
      throw ParseError("duplicate document id '" + doc.id + "'");
    }
    ++class_counts_[static_cast<std::size_t>(doc.label)];
  }
}

std::vector<std::size_t> LabeledCorpus::indices_of(Label label) const {
  std::vector<std::size_t> out;
  out.reserve(count(label));
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].label == label) out.push_back(i);
  }
  return out;
}

}  // namespace wdaug
