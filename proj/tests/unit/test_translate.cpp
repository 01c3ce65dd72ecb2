#include <doctest.h>

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "wdaug/error.hpp"
#include "wdaug/mock_service.hpp"
#include "wdaug/translate.hpp"

using namespace wdaug;

namespace {

// Minimal scripted HTTP server for failure-mode tests.
class ScriptedServer {
 public:
  explicit ScriptedServer(httplib::Server::Handler handler) {
    server_.Post("/translate", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    worker_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~ScriptedServer() {
    server_.stop();
    worker_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/translate"; }

 private:
  httplib::Server server_;
  std::thread worker_;
  int port_ = 0;
};

}  // namespace

TEST_SUITE("translate") {

TEST_CASE("identity provider round-trips any text") {
  bt::IdentityProvider provider;
  CHECK(bt::backtranslate("hello there", "fr", provider) == "hello there");
  CHECK(provider.calls() == 2);  // forward + back
}

TEST_CASE("dictionary provider chains the two directions") {
  bt::DictionaryProvider provider;
  provider.add_direction("en", "fr", {{"good", "bon"}});
  provider.add_direction("fr", "en", {{"bon", "nice"}});
  CHECK(bt::backtranslate("good", "fr", provider) == "nice");
  // Unknown words pass through each stage.
  CHECK(bt::backtranslate("good day", "fr", provider) == "nice day");
  // Missing direction behaves as identity.
  CHECK(provider.translate("good", "en", "de") == "good");
}

TEST_CASE("backtranslate validates input and pivot") {
  bt::IdentityProvider provider;
  CHECK_THROWS_AS(bt::backtranslate("", "fr", provider), UsageError);
  CHECK_THROWS_AS(bt::backtranslate("x", "en", provider), UsageError);
}

TEST_CASE("empty forward translation names the stage") {
  bt::DictionaryProvider provider;
  provider.add_direction("en", "fr", {{"x", ""}});
  try {
    bt::backtranslate("x", "fr", provider);
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(std::string(e.what()).find("forward") != std::string::npos);
  }
}

TEST_CASE("BtAugmenter perturbs text and explanation via the pivot") {
  auto provider = std::make_shared<bt::DictionaryProvider>();
  provider->add_direction("en", "fr", {{"tired", "fatigue"}});
  provider->add_direction("fr", "en", {{"fatigue", "exhausted"}});
  bt::BtAugmenter aug(provider, "fr");
  CHECK(aug.method() == Source::Bt);

  LabeledDocument parent;
  parent.id = "p";
  parent.text = "i am tired";
  parent.explanation = "very tired";
  const auto result = aug.augment(parent, 1);
  CHECK(result.text == "i am exhausted");
  CHECK(result.explanation == "very exhausted");
  CHECK(aug.provider_calls() == 4);  // two round trips
}

TEST_CASE("remote provider translates against the bundled mock") {
  mock::MockWireServer server({0, ""});
  bt::RemoteBtOptions options;
  options.endpoint = server.base_url() + "/translate";
  options.max_retries = 0;
  bt::RemoteProvider provider(options);
  const auto out = provider.translate("i am tired", "en", "fr");
  CHECK(out == "je suis fatigue");
  CHECK(provider.calls() == 1);
}

TEST_CASE("remote provider endpoint without a path defaults to /translate") {
  mock::MockWireServer server({0, ""});
  bt::RemoteBtOptions options;
  options.endpoint = server.base_url();
  options.max_retries = 0;
  bt::RemoteProvider provider(options);
  CHECK(provider.translate("tired", "en", "fr") == "fatigue");
}

TEST_CASE("remote provider requires an endpoint") {
  CHECK_THROWS_AS(bt::RemoteProvider(bt::RemoteBtOptions{}), UsageError);
}

TEST_CASE("connection failure raises ProviderError after the retry budget") {
  bt::RemoteBtOptions options;
  options.endpoint = "http://127.0.0.1:1/translate";  // nothing listens here
  options.max_retries = 2;
  options.backoff_base_ms = 1;
  options.timeout_s = 2.0;
  bt::RemoteProvider provider(options);
  try {
    provider.translate("x", "en", "fr");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(std::string(e.what()).find("3 attempts") != std::string::npos);
  }
  CHECK(provider.calls() == 3);  // initial + 2 retries
}

TEST_CASE("HTTP 429 is retried with its own budget") {
  std::atomic<int> hits{0};
  ScriptedServer server([&](const httplib::Request&, httplib::Response& res) {
    if (hits.fetch_add(1) < 2) {
      res.status = 429;
      res.set_content("slow down", "text/plain");
    } else {
      res.set_content(nlohmann::json{{"translatedText", "ok"}}.dump(), "application/json");
    }
  });
  bt::RemoteBtOptions options;
  options.endpoint = server.url();
  options.max_retries = 0;
  options.backoff_base_ms = 1;
  bt::RemoteProvider provider(options);
  CHECK(provider.translate("x", "en", "fr") == "ok");
  CHECK(hits.load() == 3);
}

TEST_CASE("non-200 status raises ProviderError without transport retries") {
  std::atomic<int> hits{0};
  ScriptedServer server([&](const httplib::Request&, httplib::Response& res) {
    hits.fetch_add(1);
    res.status = 500;
    res.set_content("boom", "text/plain");
  });
  bt::RemoteBtOptions options;
  options.endpoint = server.url();
  options.max_retries = 3;
  options.backoff_base_ms = 1;
  bt::RemoteProvider provider(options);
  try {
    provider.translate("x", "en", "fr");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(std::string(e.what()).find("500") != std::string::npos);
  }
  CHECK(hits.load() == 1);
}

TEST_CASE("malformed JSON reply raises ProviderError") {
  ScriptedServer server([&](const httplib::Request&, httplib::Response& res) {
    res.set_content("not json", "text/plain");
  });
  bt::RemoteBtOptions options;
  options.endpoint = server.url();
  options.max_retries = 0;
  bt::RemoteProvider provider(options);
  CHECK_THROWS_AS(provider.translate("x", "en", "fr"), ProviderError);
}

TEST_CASE("mock translate route paraphrases through the fr pivot") {
  // en->fr->en is not the identity for covered words, which is what makes
  // the mock useful for back-translation pipelines.
  const auto once = mock::mock_translate("i am tired", "en", "fr");
  const auto back = mock::mock_translate(once, "fr", "en");
  CHECK(once == "je suis fatigue");
  CHECK(back == "i am exhausted");
}

}  // TEST_SUITE
