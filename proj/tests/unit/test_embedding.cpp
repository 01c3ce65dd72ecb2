#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "wdaug/embedding.hpp"
#include "wdaug/error.hpp"
#include "wdaug/mock_service.hpp"
#include "wdaug/similarity.hpp"

using namespace wdaug;

namespace {

double l2_norm(const std::vector<double>& v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  return std::sqrt(sq);
}

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("builtin embedder: fixed dimension, unit norm, deterministic") {
  embed::BuiltinEmbedder embedder;
  CHECK(embedder.dimension() == embed::BuiltinEmbedder::kDimension);
  const auto v = embedder.embed("I feel tired all the time.");
  REQUIRE(v.size() == embed::BuiltinEmbedder::kDimension);
  CHECK(l2_norm(v) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(embedder.embed("I feel tired all the time.") == v);
}

TEST_CASE("builtin embedder normalizes case and whitespace first") {
  embed::BuiltinEmbedder embedder;
  const auto a = embedder.embed("Hello  World");
  const auto b = embedder.embed("hello world");
  CHECK(a == b);
}

TEST_CASE("builtin embedder handles texts shorter than a trigram") {
  embed::BuiltinEmbedder embedder;
  const auto v = embedder.embed("ab");
  CHECK(l2_norm(v) == doctest::Approx(1.0).epsilon(1e-12));
  const auto empty = embedder.embed("");
  CHECK(l2_norm(empty) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("similar texts score a higher cosine than unrelated texts") {
  embed::BuiltinEmbedder embedder;
  const auto base = embedder.embed("i cannot sleep at night and feel weak");
  const auto near = embedder.embed("i cannot sleep at night and feel tired");
  const auto far = embedder.embed("quarterly revenue exceeded projections");
  CHECK(sim::cosine(base, near) > sim::cosine(base, far));
}

TEST_CASE("remote embedder requires an endpoint") {
  embed::RemoteEmbedOptions options;
  CHECK_THROWS_AS(embed::RemoteEmbedder{options}, UsageError);
}

TEST_CASE("remote embedder against the mock returns the builtin vectors") {
  mock::MockWireServer server;
  embed::RemoteEmbedOptions options;
  options.endpoint = server.base_url();
  embed::RemoteEmbedder remote(options);
  embed::BuiltinEmbedder builtin;

  const std::string text = "My friends visited me after the long week.";
  const auto via_wire = remote.embed(text);
  const auto direct = builtin.embed(text);
  REQUIRE(via_wire.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    REQUIRE(via_wire[i] == doctest::Approx(direct[i]).epsilon(1e-12));
  }
  CHECK(remote.dimension() == builtin.dimension());
  CHECK(remote.calls() == 1);
}

TEST_CASE("remote embedder surfaces auth failures as ProviderError") {
  mock::MockWireServer server({0, "sekrit"});
  embed::RemoteEmbedOptions options;
  options.endpoint = server.base_url();
  options.max_retries = 0;
  embed::RemoteEmbedder remote(options);
  try {
    remote.embed("anything");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(std::string(e.what()).find("401") != std::string::npos);
  }

  embed::RemoteEmbedOptions keyed = options;
  keyed.api_key = "sekrit";
  embed::RemoteEmbedder authed(keyed);
  CHECK(l2_norm(authed.embed("anything")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("remote embedder rejects unreachable endpoints after retries") {
  embed::RemoteEmbedOptions options;
  options.endpoint = "http://127.0.0.1:1";
  options.max_retries = 1;
  options.backoff_base_ms = 1;
  embed::RemoteEmbedder remote(options);
  CHECK_THROWS_AS(remote.embed("hello"), ProviderError);
  CHECK(remote.calls() == 2);  // first try + one retry
}

}  // TEST_SUITE
