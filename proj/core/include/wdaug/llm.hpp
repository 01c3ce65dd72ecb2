#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wdaug/balance.hpp"
#include "wdaug/parallel.hpp"

namespace wdaug::llm {

// Five worked text/explanation pairs covering all four classes (one class
// appears twice), rendered in this fixed order into every explanation
// prompt.
struct Exemplar {
  std::string text;
  std::string explanation;
  Label label = Label::PA;
};

class PromptTemplate {
 public:
  // Validates count and class coverage; throws UsageError.
  explicit PromptTemplate(std::vector<Exemplar> exemplars);

  // JSON file: [{"text": ..., "explanation": ..., "label": "PA"}, x5]
  static PromptTemplate load(const std::filesystem::path& path);

  const std::vector<Exemplar>& exemplars() const { return exemplars_; }

 private:
  std::vector<Exemplar> exemplars_;
};

struct GenParams {
  std::string model = "gpt-3.5-turbo";
  double temperature = 0.7;
  int max_tokens = 256;
  int max_retries = 3;
  int dedup_retries = 2;
};

// Upper panel: four lines, long-form class name substituted.
std::string render_similar_text_prompt(const std::string& label_name, const std::string& doc_text);

// Lower panel: instruction, five exemplar pairs, the original pair, then the
// augmented text with a trailing "explanation:" cue. Byte-identical across
// calls with equal inputs.
std::string render_explanation_prompt(const PromptTemplate& tmpl,
                                      const std::pair<std::string, std::string>& original,
                                      const std::string& augmented_text);

// One completion request; implementations throw ProviderError on failure.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual std::string complete(const std::string& prompt, const GenParams& params) = 0;
};

enum class ApiKind { Chat, LegacyCompletions };

struct HttpClientOptions {
  std::string base_url = "https://api.openai.com";
  ApiKind api = ApiKind::Chat;
  std::string api_key;  // taken from WDAUG_API_KEY when empty
  int backoff_base_ms = 500;
  double timeout_s = 30.0;
  double rate_limit_per_s = 0.0;  // 0 disables the token bucket
};

// OpenAI-compatible wire client. Chat mode POSTs /v1/chat/completions and
// reads choices[0].message.content; legacy mode POSTs /v1/completions and
// reads choices[0].text. Thread-safe.
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(HttpClientOptions options);
  std::string complete(const std::string& prompt, const GenParams& params) override;
  std::size_t calls() const { return calls_.load(); }

 private:
  HttpClientOptions options_;
  TokenBucket bucket_;
  std::atomic<std::size_t> calls_{0};
};

// Test double driven by a function of (prompt, call ordinal).
class CallbackChatClient : public ChatClient {
 public:
  using Handler = std::function<std::string(const std::string& prompt, std::size_t call)>;
  explicit CallbackChatClient(Handler handler) : handler_(std::move(handler)) {}

  std::string complete(const std::string& prompt, const GenParams& params) override;
  std::size_t calls() const { return calls_.load(); }
  std::vector<std::string> prompts() const;

 private:
  Handler handler_;
  std::atomic<std::size_t> calls_{0};
  mutable std::mutex mutex_;
  std::vector<std::string> prompts_;
};

// Asks for text similar to doc.text under its class topic. Retries
// duplicates of the original up to params.dedup_retries, then accepts with a
// warning; an empty completion after the retry budget is an error.
LabeledDocument generate_similar(const LabeledDocument& doc, const GenParams& params,
                                 ChatClient& client);

// Few-shot explanation for an augmented record; requires the parent's
// explanation for the original-pair slot.
std::string generate_explanation(const LabeledDocument& augmented, const LabeledDocument& parent,
                                 const PromptTemplate& tmpl, const GenParams& params,
                                 ChatClient& client);

class LlmAugmenter : public Augmenter {
 public:
  LlmAugmenter(std::shared_ptr<ChatClient> client, GenParams params,
               std::shared_ptr<const PromptTemplate> tmpl)
      : client_(std::move(client)), params_(std::move(params)), template_(std::move(tmpl)) {}

  Source method() const override { return Source::Llm; }
  AugmentResult augment(const LabeledDocument& parent, std::uint64_t seed) override;

 private:
  std::shared_ptr<ChatClient> client_;
  GenParams params_;
  std::shared_ptr<const PromptTemplate> template_;
};

}  // namespace wdaug::llm
