#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

namespace wdaug::embed {

// Maps a text to a fixed-dimension vector; implementations throw
// ProviderError on remote failure.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
  virtual std::size_t dimension() const = 0;
};

// Offline embedder: hashed character trigrams over the lowercased,
// whitespace-normalized text, L2-normalized. Texts shorter than one trigram
// fall back to a single whole-string feature so nothing embeds to zero.
class BuiltinEmbedder : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDimension = 256;

  std::vector<double> embed(const std::string& text) override;
  std::size_t dimension() const override { return kDimension; }
};

struct RemoteEmbedOptions {
  std::string endpoint;  // e.g. http://127.0.0.1:8089
  std::string model = "text-embedding-ada-002";
  std::string api_key;  // taken from WDAUG_API_KEY when empty
  int max_retries = 3;
  int backoff_base_ms = 500;
  double timeout_s = 30.0;
};

// POSTs {"model", "input"} to <endpoint>/v1/embeddings and reads
// data[0].embedding. The dimension is learned from the first response and
// later mismatches are errors. Thread-safe.
class RemoteEmbedder : public EmbeddingProvider {
 public:
  explicit RemoteEmbedder(RemoteEmbedOptions options);

  std::vector<double> embed(const std::string& text) override;
  std::size_t dimension() const override { return dimension_.load(); }
  std::size_t calls() const { return calls_.load(); }

 private:
  RemoteEmbedOptions options_;
  std::atomic<std::size_t> dimension_{0};
  std::atomic<std::size_t> calls_{0};
};

}  // namespace wdaug::embed
