#include "wdaug/llm.hpp"

#include <array>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "http_support.hpp"
#include "wdaug/error.hpp"
#include "wdaug/log.hpp"
#include "wdaug/text.hpp"

namespace wdaug::llm {

using nlohmann::json;

PromptTemplate::PromptTemplate(std::vector<Exemplar> exemplars)
    : exemplars_(std::move(exemplars)) {
  if (exemplars_.size() != 5) {
    throw UsageError("explanation prompt needs exactly five exemplars, got " +
                     std::to_string(exemplars_.size()));
  }
  std::array<bool, kNumLabels> seen{};
  for (const auto& ex : exemplars_) {
    if (ex.text.empty() || ex.explanation.empty()) {
      throw UsageError("exemplars must have non-empty text and explanation");
    }
    seen[static_cast<std::size_t>(ex.label)] = true;
  }
  for (std::size_t j = 0; j < kNumLabels; ++j) {
    if (!seen[j]) {
      throw UsageError("exemplars must cover all four classes; missing " +
                       std::string(label_code(kLabels[j])));
    }
  }
}

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open exemplar file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("exemplars " + path.string() + ": " + e.what());
  }
  if (!j.is_array()) {
    throw ParseError("exemplars " + path.string() + ": expected a JSON array");
  }
  std::vector<Exemplar> exemplars;
  for (const auto& item : j) {
    Exemplar ex;
    ex.text = item.value("text", "");
    ex.explanation = item.value("explanation", "");
    const std::string label_str = item.value("label", "");
    const auto label = parse_label(label_str);
    if (!label) {
      throw ParseError("exemplars " + path.string() + ": unknown label \"" + label_str + "\"");
    }
    ex.label = *label;
    exemplars.push_back(std::move(ex));
  }
  return PromptTemplate(std::move(exemplars));
}

std::string render_similar_text_prompt(const std::string& label_name,
                                       const std::string& doc_text) {
  std::string prompt = "Considering the given topic, generate similar text to the given text.\n";
  prompt += "Topic: " + label_name + "\n";
  prompt += "Text: " + doc_text + "\n";
  prompt += "Similar text:";
  return prompt;
}

std::string render_explanation_prompt(const PromptTemplate& tmpl,
                                      const std::pair<std::string, std::string>& original,
                                      const std::string& augmented_text) {
  std::string prompt =
      "Consider the examples and generate a very short explanation of the given text.\n\n";
  for (const auto& ex : tmpl.exemplars()) {
    prompt += "text: " + ex.text + "\n";
    prompt += "explanation: " + ex.explanation + "\n";
  }
  prompt += "text: " + original.first + "\n";
  prompt += "explanation: " + original.second + "\n\n";
  prompt += "text: " + augmented_text + "\n";
  prompt += "explanation:";
  return prompt;
}

HttpChatClient::HttpChatClient(HttpClientOptions options)
    : options_(std::move(options)),
      bucket_(options_.rate_limit_per_s, options_.rate_limit_per_s) {
  if (options_.api_key.empty()) {
    if (const char* env = std::getenv("WDAUG_API_KEY")) {
      options_.api_key = env;
    }
  }
}

std::string HttpChatClient::complete(const std::string& prompt, const GenParams& params) {
  bucket_.acquire();
  const auto endpoint = http::parse_endpoint(options_.base_url);
  json body;
  std::string path;
  if (options_.api == ApiKind::Chat) {
    path = "/v1/chat/completions";
    body = {{"model", params.model},
            {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
            {"temperature", params.temperature},
            {"max_tokens", params.max_tokens}};
  } else {
    path = "/v1/completions";
    body = {{"model", params.model},
            {"prompt", prompt},
            {"temperature", params.temperature},
            {"max_tokens", params.max_tokens}};
  }
  http::RetryPolicy policy;
  policy.max_retries = params.max_retries;
  policy.max_rate_limit_retries = params.max_retries;
  policy.backoff_base_ms = options_.backoff_base_ms;
  policy.timeout_s = options_.timeout_s;
  const auto response =
      http::post_json(endpoint, path, body.dump(), options_.api_key, policy, &calls_);
  if (response.status != 200) {
    throw ProviderError("completion endpoint returned HTTP " + std::to_string(response.status) +
                        ": " + response.body.substr(0, 200));
  }
  json parsed;
  try {
    parsed = json::parse(response.body);
  } catch (const json::parse_error& e) {
    throw ProviderError(std::string("completion endpoint returned malformed JSON: ") + e.what());
  }
  try {
    if (options_.api == ApiKind::Chat) {
      return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    }
    return parsed.at("choices").at(0).at("text").get<std::string>();
  } catch (const json::exception&) {
    throw ProviderError("completion response lacks choices[0] content");
  }
}

std::string CallbackChatClient::complete(const std::string& prompt, const GenParams&) {
  const std::size_t call = calls_.fetch_add(1);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    prompts_.push_back(prompt);
  }
  return handler_(prompt, call);
}

std::vector<std::string> CallbackChatClient::prompts() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return prompts_;
}

namespace {

// Completion bodies sometimes echo the prompt or the cue line; keep only the
// generated part.
std::string strip_echo(std::string completion, const std::string& prompt) {
  if (completion.rfind(prompt, 0) == 0) {
    completion.erase(0, prompt.size());
  }
  const std::string cue = "Similar text:";
  if (completion.rfind(cue, 0) == 0) {
    completion.erase(0, cue.size());
  }
  return text::trim(completion);
}

}  // namespace

LabeledDocument generate_similar(const LabeledDocument& doc, const GenParams& params,
                                 ChatClient& client) {
  if (doc.source != Source::Original) {
    throw UsageError("generate_similar expects an original record (id '" + doc.id + "')");
  }
  const std::string prompt =
      render_similar_text_prompt(std::string(label_long_name(doc.label)), doc.text);
  std::string generated;
  bool duplicate = false;
  for (int attempt = 0; attempt <= params.dedup_retries; ++attempt) {
    generated = strip_echo(client.complete(prompt, params), prompt);
    duplicate = generated.empty() || text::normalized_equal(generated, doc.text);
    if (!duplicate) break;
  }
  if (generated.empty()) {
    throw ProviderError("empty completion for parent '" + doc.id + "' after " +
                        std::to_string(params.dedup_retries + 1) + " attempts");
  }
  if (duplicate) {
    log::warn("generated text equals the original for parent '" + doc.id +
              "'; accepting after " + std::to_string(params.dedup_retries + 1) + " attempts");
  }
  LabeledDocument out;
  out.id = doc.id + "-llm";
  out.text = generated;
  out.label = doc.label;
  out.source = Source::Llm;
  out.parent_id = doc.id;
  return out;
}

std::string generate_explanation(const LabeledDocument& augmented, const LabeledDocument& parent,
                                 const PromptTemplate& tmpl, const GenParams& params,
                                 ChatClient& client) {
  if (parent.explanation.empty()) {
    throw UsageError("generate_explanation requires a parent with a non-empty explanation (id '" +
                     parent.id + "')");
  }
  const std::string prompt =
      render_explanation_prompt(tmpl, {parent.text, parent.explanation}, augmented.text);
  std::string generated;
  for (int attempt = 0; attempt <= params.dedup_retries; ++attempt) {
    generated = text::trim(client.complete(prompt, params));
    if (!generated.empty()) break;
  }
  if (generated.empty()) {
    throw ProviderError("empty explanation for record '" + augmented.id + "' after " +
                        std::to_string(params.dedup_retries + 1) + " attempts");
  }
  return generated;
}

AugmentResult LlmAugmenter::augment(const LabeledDocument& parent, std::uint64_t) {
  AugmentResult result;
  const LabeledDocument generated = generate_similar(parent, params_, *client_);
  result.text = generated.text;
  if (!parent.explanation.empty()) {
    if (!template_) {
      throw UsageError("llm augmentation needs an exemplar file to generate explanations");
    }
    result.explanation = generate_explanation(generated, parent, *template_, params_, *client_);
  }
  return result;
}

}  // namespace wdaug::llm
