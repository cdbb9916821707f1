// SPDX-License-Identifier: Apache-2.0
//
// Weekly per-country aggregation of scored tweets and the correlation
// of those series against official case counts, including the lead-lag
// sweep. Positive lag means the tweet series leads the case series.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covtrends/calendar.hpp"
#include "covtrends/ingest.hpp"
#include "covtrends/sentiment.hpp"

namespace covtrends {

struct ScoredTweet {
  TweetRecord record;
  std::vector<std::string> countries;  // sorted unique ISO codes, may be empty
  SentimentLabel label = SentimentLabel::Neutral;
};

struct WeeklyBucket {
  Date week;            // a Tuesday
  std::string country;  // ISO code or GLOBAL
  std::uint64_t n_total = 0;
  std::uint64_t n_pos = 0;
  std::uint64_t n_neg = 0;
  std::uint64_t n_neutral = 0;

  bool operator==(const WeeklyBucket&) const = default;
};

// One bucket per (week, country) and per (week, GLOBAL), zero-filled,
// sorted by (country, week). A tweet increments GLOBAL once and each
// of its tagged countries once; the result does not depend on input
// order. Throws ArgumentError (naming the tweet id) when a tweet's
// date is not one of `weeks` or it is tagged outside `countries`.
std::vector<WeeklyBucket> aggregate_weekly(const std::vector<ScoredTweet>& tweets,
                                           const std::vector<Date>& weeks,
                                           const std::vector<std::string>& countries);

// Weekly case figure: trailing 7-day sum of daily new cases ending on
// the sampled Tuesday (w-6 .. w). Throws ArgumentError naming the
// missing dates on a coverage gap.
std::vector<std::int64_t> weekly_cases(const CaseSeries& series,
                                       const std::vector<Date>& weeks);

// Sample Pearson correlation. Throws ArgumentError on length mismatch,
// n < 3, or a constant series (reported NOT-COMPUTABLE upstream,
// never a fabricated coefficient).
double pearson(std::span<const double> x, std::span<const double> y);

struct LagCorrelation {
  int lag = 0;
  double r = 0.0;
  std::size_t n = 0;
};

struct CorrelationReport {
  std::string country;
  std::string series_x = "tweets";
  std::string series_y = "cases";
  std::vector<LagCorrelation> lags;  // ascending by lag
  int best_lag = 0;                  // argmax r
};

// Correlates x_t against y_{t+k} for every k in [-max_lag, +max_lag]
// over the overlap (positive k: x leads y). Lags whose overlap is
// shorter than 3 or constant are omitted; if every lag is omitted an
// ArgumentError is thrown. Ties on r break toward lag 0, then smaller
// |lag|, then the positive lag.
CorrelationReport lagged_xcorr(std::span<const double> x, std::span<const double> y,
                               int max_lag);

}  // namespace covtrends
