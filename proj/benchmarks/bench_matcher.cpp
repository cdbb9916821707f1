// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "covtrends/lexicon.hpp"
#include "covtrends/matcher.hpp"
#include "covtrends/normalize.hpp"
#include "covtrends/rng.hpp"

namespace {

using namespace covtrends;

// Synthetic lexicon of `n` unique single-token surfaces plus a few
// multi-word ones, spread over two-letter country codes.
Lexicon synthetic_lexicon(std::size_t n) {
  static const char* kSyllables[] = {"ba", "do", "fa", "gu", "ka", "le", "mi",
                                     "no", "pa", "re", "sa", "tu", "va", "wo",
                                     "ya", "zo", "bri", "dan", "fer", "gol"};
  SplitMix64 rng(4096);
  std::set<std::string> used;
  Lexicon lex;
  while (used.size() < n) {
    std::string name;
    const std::size_t syllables = 3 + rng.below(2);
    for (std::size_t i = 0; i < syllables; ++i)
      name += kSyllables[rng.below(std::size(kSyllables))];
    if (!used.insert(name).second) continue;
    const std::string country = {static_cast<char>('A' + rng.below(26)),
                                 static_cast<char>('A' + rng.below(26))};
    lex.entries.push_back(LocationEntry{name, country, EntryKind::City});
  }
  std::sort(lex.entries.begin(), lex.entries.end());
  lex.entries.erase(std::unique(lex.entries.begin(), lex.entries.end()),
                    lex.entries.end());
  return lex;
}

std::vector<std::string> tweet_like_texts(const Lexicon& lex, std::size_t count) {
  static const char* kFillers[] = {"people", "news", "staying", "home",
                                   "update", "numbers", "week", "report"};
  SplitMix64 rng(11);
  std::vector<std::string> texts;
  texts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::ostringstream text;
    for (int w = 0; w < 12; ++w) {
      if (w) text << ' ';
      if (w % 5 == 2)
        text << lex.entries[rng.below(lex.entries.size())].surface;
      else
        text << kFillers[rng.below(std::size(kFillers))];
    }
    texts.push_back(text.str());
  }
  return texts;
}

void BM_MatcherCompile(benchmark::State& state) {
  const auto lex = synthetic_lexicon(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto matcher = Matcher::compile(lex);
    benchmark::DoNotOptimize(matcher);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(lex.entries.size()));
}
BENCHMARK(BM_MatcherCompile)->Arg(1000)->Arg(7000)->Arg(20000);

void BM_TagLocations(benchmark::State& state) {
  const auto lex = synthetic_lexicon(static_cast<std::size_t>(state.range(0)));
  const auto matcher = Matcher::compile(lex);
  const auto texts = tweet_like_texts(lex, 4096);
  std::size_t i = 0;
  std::size_t tags = 0;
  for (auto _ : state) {
    tags += matcher.tag_locations(texts[i++ & 4095]).size();
    benchmark::DoNotOptimize(tags);
  }
  state.SetItemsProcessed(state.iterations());  // texts/second
}
BENCHMARK(BM_TagLocations)->Arg(1000)->Arg(7000)->Arg(20000);

void BM_NormalizeText(benchmark::State& state) {
  const std::string text =
      "Thinking of S\xC3\xA3o Paulo, M\xC3\xBCnchen and #Toronto tonight "
      "COVID19 numbers rising across the WORLD";
  for (auto _ : state) {
    auto norm = normalize_text(text);
    benchmark::DoNotOptimize(norm);
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_NormalizeText);

}  // namespace

BENCHMARK_MAIN();
