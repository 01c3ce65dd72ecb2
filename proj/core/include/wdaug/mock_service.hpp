#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace wdaug::mock {

struct MockOptions {
  int port = 0;                // 0 = pick a free port
  std::string require_bearer;  // when set, requests must carry this token
};

// Offline stand-in for the remote services, speaking the same wire protocol:
//   POST /v1/chat/completions  -> choices[0].message.content
//   POST /v1/completions       -> choices[0].text
//   POST /v1/embeddings        -> data[0].embedding (builtin embedder)
//   POST /translate            -> {"translatedText": ...}
// Replies are a deterministic function of the request body, so pipelines
// against the mock are reproducible byte-for-byte.
class MockWireServer {
 public:
  explicit MockWireServer(MockOptions options = {});
  ~MockWireServer();

  MockWireServer(const MockWireServer&) = delete;
  MockWireServer& operator=(const MockWireServer&) = delete;

  int port() const;
  std::string base_url() const;  // http://127.0.0.1:<port>
  std::size_t requests() const;  // requests served so far

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// The mock's reply rules, exposed so tests can assert expectations without
// going through HTTP.
std::string mock_chat_reply(const std::string& prompt);
std::string mock_translate(const std::string& text, const std::string& source,
                           const std::string& target);

}  // namespace wdaug::mock
