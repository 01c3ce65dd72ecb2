#include "wdaug/translate.hpp"

#include <sstream>

#include <json.hpp>

#include "http_support.hpp"
#include "wdaug/error.hpp"

namespace wdaug::bt {

using nlohmann::json;

std::string DictionaryProvider::translate(const std::string& input,
                                          const std::string& source_lang,
                                          const std::string& target_lang) {
  calls_.fetch_add(1);
  const auto it = maps_.find(source_lang + ">" + target_lang);
  if (it == maps_.end()) return input;
  std::istringstream in(input);
  std::string word;
  std::string out;
  while (in >> word) {
    const auto hit = it->second.find(word);
    if (!out.empty()) out += ' ';
    out += hit == it->second.end() ? word : hit->second;
  }
  return out;
}

RemoteProvider::RemoteProvider(RemoteBtOptions options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) {
    throw UsageError("bt.endpoint is not configured");
  }
}

std::string RemoteProvider::translate(const std::string& input, const std::string& source_lang,
                                      const std::string& target_lang) {
  auto endpoint = http::parse_endpoint(options_.endpoint);
  if (endpoint.path_prefix.empty()) {
    endpoint.path_prefix = "/translate";
  }
  json body = {{"q", input}, {"source", source_lang}, {"target", target_lang}};
  http::RetryPolicy policy;
  policy.max_retries = options_.max_retries;
  policy.backoff_base_ms = options_.backoff_base_ms;
  policy.timeout_s = options_.timeout_s;
  const auto response = http::post_json(endpoint, "", body.dump(), "", policy, &calls_);
  if (response.status != 200) {
    throw ProviderError("translate endpoint returned HTTP " + std::to_string(response.status));
  }
  json parsed;
  try {
    parsed = json::parse(response.body);
  } catch (const json::parse_error& e) {
    throw ProviderError(std::string("translate endpoint returned malformed JSON: ") + e.what());
  }
  if (!parsed.contains("translatedText") || !parsed["translatedText"].is_string()) {
    throw ProviderError("translate endpoint response lacks 'translatedText'");
  }
  return parsed["translatedText"].get<std::string>();
}

std::string backtranslate(const std::string& input, const std::string& pivot_lang,
                          TranslationProvider& provider) {
  if (input.empty()) {
    throw UsageError("backtranslate requires non-empty input");
  }
  if (pivot_lang == "en") {
    throw UsageError("pivot language must differ from the source language (en)");
  }
  const std::string forward = provider.translate(input, "en", pivot_lang);
  if (forward.empty()) {
    throw ProviderError("empty translation at the forward stage (en -> " + pivot_lang + ")");
  }
  const std::string back = provider.translate(forward, pivot_lang, "en");
  if (back.empty()) {
    throw ProviderError("empty translation at the backward stage (" + pivot_lang + " -> en)");
  }
  return back;
}

AugmentResult BtAugmenter::augment(const LabeledDocument& parent, std::uint64_t) {
  AugmentResult result;
  result.text = backtranslate(parent.text, pivot_lang_, *provider_);
  if (!parent.explanation.empty()) {
    result.explanation = backtranslate(parent.explanation, pivot_lang_, *provider_);
  }
  return result;
}

}  // namespace wdaug::bt
