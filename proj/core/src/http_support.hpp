#pragma once

// Internal HTTP plumbing shared by the chat, translation and embedding
// clients. Not installed.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>

namespace wdaug::http {

struct Endpoint {
  std::string host_url;     // scheme://host[:port], as cpp-httplib wants it
  std::string path_prefix;  // anything after host:port, "" or "/v1"
};

// Splits "http://host:1234/v1" into host_url + path_prefix. Throws
// UsageError on unparsable input.
Endpoint parse_endpoint(const std::string& base_url);

struct RetryPolicy {
  int max_retries = 3;          // extra attempts after the first, transport errors
  int max_rate_limit_retries = 3;  // separate budget for HTTP 429
  int backoff_base_ms = 500;    // doubled per attempt
  double timeout_s = 30.0;
};

struct Response {
  int status = 0;
  std::string body;
};

// POST application/json. Retries transport failures and 429 per the policy
// (the two budgets are counted separately); any other status is returned to
// the caller. bearer_token, when non-empty, becomes an Authorization header.
// Throws ProviderError when retries are exhausted. Thread-safe: a fresh
// connection per call.
Response post_json(const Endpoint& endpoint, const std::string& path, const std::string& body,
                   const std::string& bearer_token, const RetryPolicy& policy,
                   std::atomic<std::size_t>* call_counter = nullptr);

}  // namespace wdaug::http
