#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "wdaug/balance.hpp"
#include "wdaug/classify.hpp"
#include "wdaug/document.hpp"
#include "wdaug/eda.hpp"
#include "wdaug/lexicon.hpp"
#include "wdaug/rng.hpp"

namespace {

// Corpus of `docs` records, 12 tokens each over a shared vocabulary, labels
// round-robin across the four classes.
wdaug::LabeledCorpus make_corpus(std::size_t docs, std::size_t vocab) {
  wdaug::rng::Engine engine(99);
  std::vector<wdaug::LabeledDocument> out;
  out.reserve(docs);
  for (std::size_t i = 0; i < docs; ++i) {
    wdaug::LabeledDocument d;
    d.id = "b" + std::to_string(i);
    d.label = wdaug::kLabels[i % wdaug::kNumLabels];
    for (int t = 0; t < 12; ++t) {
      d.text += (t ? " w" : "w") + std::to_string(engine.bounded(vocab));
    }
    out.push_back(std::move(d));
  }
  return wdaug::LabeledCorpus(std::move(out));
}

wdaug::SynonymLexicon make_lexicon(std::size_t vocab) {
  std::unordered_map<std::string, std::vector<std::string>> entries;
  for (std::size_t i = 0; i < vocab; i += 2) {
    entries["w" + std::to_string(i)] = {"w" + std::to_string(i) + "x"};
  }
  return wdaug::SynonymLexicon(std::move(entries));
}

}  // namespace

static void BM_NaiveBayesTrain(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 2000);
  for (auto _ : state) {
    auto model = wdaug::clf::BowModel::train(corpus);
    benchmark::DoNotOptimize(model);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NaiveBayesTrain)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_NaiveBayesPredict(benchmark::State& state) {
  const auto corpus = make_corpus(4096, 2000);
  const auto model = wdaug::clf::BowModel::train(corpus);
  const auto batch = make_corpus(static_cast<std::size_t>(state.range(0)), 2000);
  for (auto _ : state) {
    auto predictions = wdaug::clf::predict_batch(model, batch);
    benchmark::DoNotOptimize(predictions);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NaiveBayesPredict)->Arg(64)->Arg(512);

static void BM_MulticlassMcc(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  wdaug::rng::Engine engine(7);
  wdaug::clf::ConfusionMatrix cm(k);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t p = 0; p < k; ++p) {
      cm.at(g, p) = 1 + engine.bounded(50);
    }
  }
  for (auto _ : state) {
    auto value = wdaug::clf::mcc(cm);
    benchmark::DoNotOptimize(value);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MulticlassMcc)->Arg(4)->Arg(16)->Arg(64);

static void BM_EdaAugment(benchmark::State& state) {
  const auto lexicon = make_lexicon(64);
  wdaug::rng::Engine engine(11);
  std::string text;
  for (int t = 0; t < 12; ++t) {
    text += (t ? " w" : "w") + std::to_string(engine.bounded(64));
  }
  wdaug::eda::EdaParams params;
  params.alpha = 0.1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    params.seed = seed++;
    auto variants = wdaug::eda::eda_augment(text, params, lexicon);
    benchmark::DoNotOptimize(variants);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EdaAugment);

static void BM_ComputePlan(benchmark::State& state) {
  const std::vector<long long> counts = {740, 592, 1139, 621};
  for (auto _ : state) {
    auto plan = wdaug::compute_plan(counts);
    benchmark::DoNotOptimize(plan);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ComputePlan);

BENCHMARK_MAIN();
