#include "wdaug/mock_service.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "wdaug/embedding.hpp"
#include "wdaug/text.hpp"
#include "wdaug/translate.hpp"

namespace wdaug::mock {

using nlohmann::json;

namespace {

// Picks out the line after `marker`, up to the following newline.
std::string line_after(const std::string& prompt, const std::string& marker,
                       bool last_occurrence) {
  const std::size_t pos =
      last_occurrence ? prompt.rfind(marker) : prompt.find(marker);
  if (pos == std::string::npos) return {};
  const std::size_t start = pos + marker.size();
  const std::size_t end = prompt.find('\n', start);
  return prompt.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

std::string mock_chat_reply(const std::string& prompt) {
  // Similar-text template: paraphrase the Text: line.
  if (prompt.find("generate similar text") != std::string::npos) {
    const std::string original = line_after(prompt, "Text: ", false);
    if (!original.empty()) {
      return "In other words, " + original;
    }
  }
  // Explanation template: summarize the last text: line.
  if (prompt.size() >= 12 && prompt.rfind("explanation:") == prompt.size() - 12) {
    const std::string subject = line_after(prompt, "\ntext: ", true);
    auto tokens = text::tokenize(subject);
    if (tokens.size() > 6) tokens.resize(6);
    if (!tokens.empty()) {
      return "Talks about " + text::detokenize(tokens) + ".";
    }
  }
  return "Echo: " + prompt;
}

namespace {

bt::DictionaryProvider& dictionary() {
  static bt::DictionaryProvider provider;
  static const bool initialized = [] {
    bt::DictionaryProvider& p = provider;
    p.add_direction("en", "fr",
                    {{"i", "je"},           {"am", "suis"},      {"the", "le"},
                     {"and", "et"},         {"my", "mon"},       {"feel", "ressens"},
                     {"feeling", "sentiment"}, {"tired", "fatigue"}, {"happy", "heureux"},
                     {"sad", "triste"},     {"work", "travail"}, {"friends", "amis"},
                     {"alone", "seul"},     {"very", "tres"},    {"always", "toujours"},
                     {"sleep", "sommeil"},  {"body", "corps"},   {"pain", "douleur"},
                     {"life", "vie"},       {"faith", "foi"},    {"school", "ecole"},
                     {"family", "famille"}, {"help", "aide"},    {"day", "jour"},
                     {"night", "nuit"},     {"people", "gens"},  {"talk", "parler"}});
    p.add_direction("fr", "en",
                    {{"je", "i"},           {"suis", "am"},      {"le", "the"},
                     {"et", "and"},         {"mon", "my"},       {"ressens", "sense"},
                     {"sentiment", "emotion"}, {"fatigue", "exhausted"}, {"heureux", "glad"},
                     {"triste", "unhappy"}, {"travail", "job"},  {"amis", "companions"},
                     {"seul", "lonely"},    {"tres", "really"},  {"toujours", "constantly"},
                     {"sommeil", "rest"},   {"corps", "physique"}, {"douleur", "ache"},
                     {"vie", "existence"},  {"foi", "belief"},   {"ecole", "college"},
                     {"famille", "household"}, {"aide", "support"}, {"jour", "daytime"},
                     {"nuit", "nighttime"}, {"gens", "folks"},   {"parler", "speak"}});
    // A second pivot with lighter coverage, exercising pass-through words.
    p.add_direction("en", "de", {{"i", "ich"}, {"the", "die"}, {"and", "und"}});
    p.add_direction("de", "en", {{"ich", "i"}, {"die", "the"}, {"und", "and"}});
    return true;
  }();
  (void)initialized;
  return provider;
}

}  // namespace

std::string mock_translate(const std::string& text, const std::string& source,
                           const std::string& target) {
  return dictionary().translate(text, source, target);
}

struct MockWireServer::Impl {
  httplib::Server server;
  std::thread worker;
  int port = 0;
  std::atomic<std::size_t> requests{0};
  std::string bearer;

  bool authorized(const httplib::Request& req) const {
    if (bearer.empty()) return true;
    return req.get_header_value("Authorization") == "Bearer " + bearer;
  }
};

MockWireServer::MockWireServer(MockOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->bearer = options.require_bearer;
  auto* impl = impl_.get();

  auto guard = [impl](const httplib::Request& req, httplib::Response& res, json& body) {
    impl->requests.fetch_add(1);
    if (!impl->authorized(req)) {
      res.status = 401;
      res.set_content(R"({"error": "unauthorized"})", "application/json");
      return false;
    }
    try {
      body = json::parse(req.body);
    } catch (const json::parse_error&) {
      res.status = 400;
      res.set_content(R"({"error": "malformed JSON body"})", "application/json");
      return false;
    }
    return true;
  };

  impl_->server.Post("/v1/chat/completions", [guard](const httplib::Request& req,
                                                     httplib::Response& res) {
    json body;
    if (!guard(req, res, body)) return;
    std::string prompt;
    if (body.contains("messages") && body["messages"].is_array() && !body["messages"].empty()) {
      prompt = body["messages"].back().value("content", "");
    }
    if (prompt.empty()) {
      res.status = 400;
      res.set_content(R"({"error": "messages[].content required"})", "application/json");
      return;
    }
    const std::string reply = mock_chat_reply(prompt);
    const json out = {
        {"id", "mock-chat"},
        {"object", "chat.completion"},
        {"model", body.value("model", "mock")},
        {"choices",
         json::array({{{"index", 0},
                       {"message", {{"role", "assistant"}, {"content", reply}}},
                       {"finish_reason", "stop"}}})}};
    res.set_content(out.dump(), "application/json");
  });

  impl_->server.Post("/v1/completions", [guard](const httplib::Request& req,
                                                httplib::Response& res) {
    json body;
    if (!guard(req, res, body)) return;
    const std::string prompt = body.value("prompt", "");
    if (prompt.empty()) {
      res.status = 400;
      res.set_content(R"({"error": "prompt required"})", "application/json");
      return;
    }
    const json out = {{"id", "mock-completion"},
                      {"object", "text_completion"},
                      {"model", body.value("model", "mock")},
                      {"choices", json::array({{{"index", 0},
                                                {"text", mock_chat_reply(prompt)},
                                                {"finish_reason", "stop"}}})}};
    res.set_content(out.dump(), "application/json");
  });

  impl_->server.Post("/v1/embeddings", [guard](const httplib::Request& req,
                                               httplib::Response& res) {
    json body;
    if (!guard(req, res, body)) return;
    if (!body.contains("input") || !body["input"].is_string()) {
      res.status = 400;
      res.set_content(R"({"error": "input must be a string"})", "application/json");
      return;
    }
    embed::BuiltinEmbedder embedder;
    const json out = {
        {"object", "list"},
        {"model", body.value("model", "mock")},
        {"data", json::array({{{"object", "embedding"},
                               {"index", 0},
                               {"embedding", embedder.embed(body["input"].get<std::string>())}}})}};
    res.set_content(out.dump(), "application/json");
  });

  impl_->server.Post("/translate", [guard](const httplib::Request& req, httplib::Response& res) {
    json body;
    if (!guard(req, res, body)) return;
    const std::string q = body.value("q", "");
    const std::string source = body.value("source", "");
    const std::string target = body.value("target", "");
    if (q.empty() || source.empty() || target.empty()) {
      res.status = 400;
      res.set_content(R"({"error": "q, source and target required"})", "application/json");
      return;
    }
    const json out = {{"translatedText", mock_translate(q, source, target)}};
    res.set_content(out.dump(), "application/json");
  });

  if (options.port > 0) {
    if (!impl_->server.bind_to_port("127.0.0.1", options.port)) {
      throw std::runtime_error("mock server: cannot bind port " + std::to_string(options.port));
    }
    impl_->port = options.port;
  } else {
    impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
    if (impl_->port <= 0) {
      throw std::runtime_error("mock server: cannot bind a port");
    }
  }
  impl_->worker = std::thread([impl] { impl->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockWireServer::~MockWireServer() {
  impl_->server.stop();
  if (impl_->worker.joinable()) {
    impl_->worker.join();
  }
}

int MockWireServer::port() const { return impl_->port; }

std::string MockWireServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port);
}

std::size_t MockWireServer::requests() const { return impl_->requests.load(); }

}  // namespace wdaug::mock
