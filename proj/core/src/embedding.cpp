#include "wdaug/embedding.hpp"

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "http_support.hpp"
#include "wdaug/error.hpp"
#include "wdaug/rng.hpp"
#include "wdaug/text.hpp"

namespace wdaug::embed {

using nlohmann::json;

std::vector<double> BuiltinEmbedder::embed(const std::string& text) {
  const std::string norm = text::to_lower_ascii(text::normalize_whitespace(text));
  std::vector<double> v(kDimension, 0.0);
  if (norm.size() >= 3) {
    for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
      const std::uint64_t h = rng::fnv1a64(std::string_view(norm).substr(i, 3));
      v[h % kDimension] += 1.0;
    }
  } else {
    v[rng::fnv1a64(norm) % kDimension] += 1.0;
  }
  double sq = 0.0;
  for (double x : v) sq += x * x;
  const double norm2 = std::sqrt(sq);
  if (norm2 > 0.0) {
    for (double& x : v) x /= norm2;
  }
  return v;
}

RemoteEmbedder::RemoteEmbedder(RemoteEmbedOptions options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) {
    throw UsageError("embedding endpoint is not configured");
  }
  if (options_.api_key.empty()) {
    if (const char* env = std::getenv("WDAUG_API_KEY")) {
      options_.api_key = env;
    }
  }
}

std::vector<double> RemoteEmbedder::embed(const std::string& text) {
  const auto endpoint = http::parse_endpoint(options_.endpoint);
  const json body = {{"model", options_.model}, {"input", text}};
  http::RetryPolicy policy;
  policy.max_retries = options_.max_retries;
  policy.max_rate_limit_retries = options_.max_retries;
  policy.backoff_base_ms = options_.backoff_base_ms;
  policy.timeout_s = options_.timeout_s;
  const auto response =
      http::post_json(endpoint, "/v1/embeddings", body.dump(), options_.api_key, policy, &calls_);
  if (response.status != 200) {
    throw ProviderError("embedding endpoint returned HTTP " + std::to_string(response.status) +
                        ": " + response.body.substr(0, 200));
  }
  json parsed;
  try {
    parsed = json::parse(response.body);
  } catch (const json::parse_error& e) {
    throw ProviderError(std::string("embedding endpoint returned malformed JSON: ") + e.what());
  }
  std::vector<double> vec;
  try {
    vec = parsed.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const json::exception&) {
    throw ProviderError("embedding response lacks data[0].embedding");
  }
  if (vec.empty()) {
    throw ProviderError("embedding endpoint returned an empty vector");
  }
  std::size_t expected = dimension_.load();
  if (expected == 0) {
    dimension_.compare_exchange_strong(expected, vec.size());
    expected = dimension_.load();
  }
  if (vec.size() != expected) {
    throw ProviderError("embedding dimension changed mid-run: got " +
                        std::to_string(vec.size()) + ", expected " + std::to_string(expected));
  }
  return vec;
}

}  // namespace wdaug::embed
