#include "http_support.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include <httplib.h>

#include "wdaug/error.hpp"

namespace wdaug::http {
namespace {

void sleep_backoff(int base_ms, int attempt) {
  if (base_ms <= 0) return;
  const auto delay = std::chrono::milliseconds(
      static_cast<long long>(base_ms) * (1LL << std::min(attempt, 16)));
  std::this_thread::sleep_for(delay);
}

}  // namespace

Endpoint parse_endpoint(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw UsageError("endpoint URL needs a scheme: " + base_url);
  }
  const auto path_start = base_url.find('/', scheme_end + 3);
  Endpoint ep;
  if (path_start == std::string::npos) {
    ep.host_url = base_url;
  } else {
    ep.host_url = base_url.substr(0, path_start);
    ep.path_prefix = base_url.substr(path_start);
    while (!ep.path_prefix.empty() && ep.path_prefix.back() == '/') {
      ep.path_prefix.pop_back();
    }
  }
  return ep;
}

Response post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                   const std::string& bearer_token, const RetryPolicy& policy,
                   std::atomic<std::size_t>* call_counter) {
  std::string full_path = endpoint.path_prefix + path;
  if (full_path.empty()) {
    full_path = "/";
  }
  int transport_attempts = 0;
  int rate_limit_attempts = 0;
  std::string last_error;
  for (;;) {
    httplib::Client client(endpoint.host_url);
    client.set_connection_timeout(std::chrono::duration<double>(policy.timeout_s));
    client.set_read_timeout(std::chrono::duration<double>(policy.timeout_s));
    client.set_write_timeout(std::chrono::duration<double>(policy.timeout_s));
    httplib::Headers headers;
    if (!bearer_token.empty()) {
      headers.emplace("Authorization", "Bearer " + bearer_token);
    }
    if (call_counter) call_counter->fetch_add(1);
    auto result = client.Post(full_path, headers, body, "application/json");
    if (!result) {
      last_error = httplib::to_string(result.error());
      if (transport_attempts >= policy.max_retries) {
        throw ProviderError("POST " + endpoint.host_url + full_path + " failed after " +
                            std::to_string(transport_attempts + 1) +
                            " attempts: " + last_error);
      }
      sleep_backoff(policy.backoff_base_ms, transport_attempts);
      ++transport_attempts;
      continue;
    }
    if (result->status == 429) {
      if (rate_limit_attempts >= policy.max_rate_limit_retries) {
        throw ProviderError("POST " + endpoint.host_url + full_path +
                            ": rate limited (HTTP 429) after " +
                            std::to_string(rate_limit_attempts + 1) + " attempts");
      }
      sleep_backoff(policy.backoff_base_ms, rate_limit_attempts);
      ++rate_limit_attempts;
      continue;
    }
    return Response{result->status, result->body};
  }
}

}  // namespace wdaug::http
