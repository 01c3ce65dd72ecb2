#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "wdaug/postag.hpp"
#include "wdaug/rng.hpp"
#include "wdaug/similarity.hpp"
#include "wdaug/text.hpp"

namespace {

std::vector<std::string> make_tokens(std::size_t n, std::uint64_t seed, std::size_t vocab) {
  wdaug::rng::Engine engine(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back("w" + std::to_string(engine.bounded(vocab)));
  }
  return out;
}

}  // namespace

static void BM_Rouge1(benchmark::State& state) {
  const auto candidate = make_tokens(static_cast<std::size_t>(state.range(0)), 1, 64);
  const auto reference = make_tokens(static_cast<std::size_t>(state.range(0)), 2, 64);
  for (auto _ : state) {
    auto score = wdaug::sim::rouge_n(candidate, reference, 1);
    benchmark::DoNotOptimize(score);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rouge1)->Arg(16)->Arg(64)->Arg(256);

static void BM_Rouge2(benchmark::State& state) {
  const auto candidate = make_tokens(static_cast<std::size_t>(state.range(0)), 3, 64);
  const auto reference = make_tokens(static_cast<std::size_t>(state.range(0)), 4, 64);
  for (auto _ : state) {
    auto score = wdaug::sim::rouge_n(candidate, reference, 2);
    benchmark::DoNotOptimize(score);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rouge2)->Arg(16)->Arg(64)->Arg(256);

// Quadratic DP; the arguments bracket realistic post lengths.
static void BM_RougeL(benchmark::State& state) {
  const auto candidate = make_tokens(static_cast<std::size_t>(state.range(0)), 5, 64);
  const auto reference = make_tokens(static_cast<std::size_t>(state.range(0)), 6, 64);
  for (auto _ : state) {
    auto score = wdaug::sim::rouge_l(candidate, reference);
    benchmark::DoNotOptimize(score);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RougeL)->Arg(16)->Arg(64)->Arg(256);

static void BM_PosTagSentence(benchmark::State& state) {
  const auto tokens = wdaug::text::tokenize(
      "they never slept well and the payment anxiety kept growing while "
      "friends walked quickly past the hopeful organizer with three books");
  wdaug::pos::BuiltinPosTagger tagger;
  for (auto _ : state) {
    auto tags = tagger.tag(tokens);
    benchmark::DoNotOptimize(tags);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PosTagSentence);
