// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "covtrends/rng.hpp"
#include "covtrends/sentiment.hpp"
#include "covtrends/train.hpp"

namespace {

using namespace covtrends;

std::vector<std::string> sample_texts(std::size_t count, std::size_t tokens) {
  static const char* kWords[] = {"people",  "staying", "home",   "tonight",
                                 "numbers", "rising",  "update", "report",
                                 "week",    "latest",  "news",   "today"};
  SplitMix64 rng(5);
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < count; ++i) {
    std::ostringstream text;
    for (std::size_t w = 0; w < tokens; ++w) {
      if (w) text << ' ';
      text << kWords[rng.below(std::size(kWords))];
    }
    texts.push_back(text.str());
  }
  return texts;
}

void BM_Classify(benchmark::State& state) {
  const auto model = make_reference_model(
      static_cast<std::size_t>(state.range(0)), 1u << 16, 9,
      {"sst", "semeval15-t10", "semeval15-t11"});
  const auto texts = sample_texts(1024, 14);
  std::size_t i = 0;
  for (auto _ : state) {
    auto result = classify(model, texts[i++ & 1023]);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Classify)->Arg(16)->Arg(64)->Arg(128);

void BM_TrainEpoch(benchmark::State& state) {
  std::vector<LabeledExample> examples;
  const auto texts = sample_texts(256, 14);
  for (std::size_t i = 0; i < texts.size(); ++i)
    examples.push_back(LabeledExample{
        texts[i], static_cast<SentimentLabel>(i % 3), "toy"});
  TrainConfig hp;
  hp.epochs = 1;
  hp.seed = 1;
  for (auto _ : state) {
    auto model = make_reference_model(64, 1u << 16, 9, {"toy", "toy", "toy"});
    auto trace = train(model, examples, hp);
    benchmark::DoNotOptimize(trace);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(examples.size()));
}
BENCHMARK(BM_TrainEpoch);

}  // namespace
