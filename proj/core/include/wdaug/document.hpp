#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "wdaug/label.hpp"

namespace wdaug {

// One corpus record. Invariants (enforced on load and on corpus assembly):
// the id is unique within a corpus, text is non-empty, and parent_id is set
// exactly when the record is not an original.
struct LabeledDocument {
  std::string id;
  std::string text;
  std::string explanation;  // may be empty
  Label label = Label::PA;
  Source source = Source::Original;
  std::string parent_id;  // empty iff source == Original

  bool operator==(const LabeledDocument&) const = default;
};

// Immutable after construction; share freely across threads.
class LabeledCorpus {
 public:
  LabeledCorpus() = default;

  // Validates per-document invariants and id uniqueness; throws ParseError.
  explicit LabeledCorpus(std::vector<LabeledDocument> documents);

  const std::vector<LabeledDocument>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  const LabeledDocument& operator[](std::size_t i) const { return documents_[i]; }

  const std::array<std::size_t, kNumLabels>& class_counts() const { return class_counts_; }
  std::size_t count(Label label) const { return class_counts_[static_cast<std::size_t>(label)]; }

  // Indices of documents with the given label, in corpus order.
  std::vector<std::size_t> indices_of(Label label) const;

  bool operator==(const LabeledCorpus& other) const { return documents_ == other.documents_; }

 private:
  std::vector<LabeledDocument> documents_;
  std::array<std::size_t, kNumLabels> class_counts_{};
};

}  // namespace wdaug
