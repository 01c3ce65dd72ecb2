#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "wdaug/balance.hpp"

namespace wdaug::bt {

// Capability contract for a translation system. Implementations throw
// ProviderError on transport failure and never return empty text for
// non-empty input.
class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;
  virtual std::string translate(const std::string& input, const std::string& source_lang,
                                const std::string& target_lang) = 0;
  std::size_t calls() const { return calls_.load(); }

 protected:
  std::atomic<std::size_t> calls_{0};
};

// Returns the input unchanged. Round-trip through it is the identity.
class IdentityProvider : public TranslationProvider {
 public:
  std::string translate(const std::string& input, const std::string&,
                        const std::string&) override {
    calls_.fetch_add(1);
    return input;
  }
};

// Word-map lookup per (source, target) direction; unknown words pass
// through. Deterministic, for tests and offline demos.
class DictionaryProvider : public TranslationProvider {
 public:
  using WordMap = std::map<std::string, std::string>;

  void add_direction(const std::string& source_lang, const std::string& target_lang, WordMap map) {
    maps_[source_lang + ">" + target_lang] = std::move(map);
  }

  std::string translate(const std::string& input, const std::string& source_lang,
                        const std::string& target_lang) override;

 private:
  std::map<std::string, WordMap> maps_;
};

struct RemoteBtOptions {
  std::string endpoint;  // full URL of the translate endpoint
  int max_retries = 3;
  int backoff_base_ms = 500;
  double timeout_s = 30.0;
};

// POST {"q": text, "source": lang, "target": lang} -> {"translatedText": text}
class RemoteProvider : public TranslationProvider {
 public:
  explicit RemoteProvider(RemoteBtOptions options);
  std::string translate(const std::string& input, const std::string& source_lang,
                        const std::string& target_lang) override;

 private:
  RemoteBtOptions options_;
};

// English -> pivot -> English. Exactly two provider calls on success; an
// empty intermediate or final translation is an error naming the stage.
std::string backtranslate(const std::string& input, const std::string& pivot_lang,
                          TranslationProvider& provider);

class BtAugmenter : public Augmenter {
 public:
  BtAugmenter(std::shared_ptr<TranslationProvider> provider, std::string pivot_lang)
      : provider_(std::move(provider)), pivot_lang_(std::move(pivot_lang)) {}

  Source method() const override { return Source::Bt; }
  AugmentResult augment(const LabeledDocument& parent, std::uint64_t seed) override;
  std::size_t provider_calls() const { return provider_->calls(); }

 private:
  std::shared_ptr<TranslationProvider> provider_;
  std::string pivot_lang_;
};

}  // namespace wdaug::bt
