// SPDX-License-Identifier: Apache-2.0

#include "covtrends/trends.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "covtrends/countries.hpp"
#include "covtrends/errors.hpp"

namespace covtrends {

std::vector<WeeklyBucket> aggregate_weekly(const std::vector<ScoredTweet>& tweets,
                                           const std::vector<Date>& weeks,
                                           const std::vector<std::string>& countries) {
  const std::set<Date> week_set(weeks.begin(), weeks.end());
  const std::set<std::string> country_set(countries.begin(), countries.end());

  std::map<std::pair<std::string, Date>, WeeklyBucket> buckets;
  auto ensure = [&](const std::string& country, const Date& week) -> WeeklyBucket& {
    auto& b = buckets[{country, week}];
    b.country = country;
    b.week = week;
    return b;
  };
  for (const Date& week : weeks) {
    ensure(kGlobalCode, week);
    for (const auto& country : countries) ensure(country, week);
  }

  auto bump = [](WeeklyBucket& b, SentimentLabel label) {
    ++b.n_total;
    switch (label) {
      case SentimentLabel::Positive: ++b.n_pos; break;
      case SentimentLabel::Negative: ++b.n_neg; break;
      case SentimentLabel::Neutral: ++b.n_neutral; break;
    }
  };

  for (const ScoredTweet& tweet : tweets) {
    const Date date = tweet.record.timestamp.date();
    if (!week_set.contains(date))
      throw ArgumentError("aggregate_weekly: tweet '" + tweet.record.id +
                          "' dated " + format_iso_date(date) +
                          " is outside the sampled weeks");
    bump(ensure(kGlobalCode, date), tweet.label);
    for (const auto& country : tweet.countries) {
      if (!country_set.contains(country))
        throw ArgumentError("aggregate_weekly: tweet '" + tweet.record.id +
                            "' tagged with unconfigured country " + country);
      bump(ensure(country, date), tweet.label);
    }
  }

  std::vector<WeeklyBucket> out;
  out.reserve(buckets.size());
  for (auto& [key, bucket] : buckets) out.push_back(std::move(bucket));
  return out;  // map order == (country, week) order
}

std::vector<std::int64_t> weekly_cases(const CaseSeries& series,
                                       const std::vector<Date>& weeks) {
  std::map<std::int64_t, std::int64_t> by_day;
  for (std::size_t i = 0; i < series.dates.size(); ++i)
    by_day[days_from_civil(series.dates[i])] = series.daily_new_cases[i];

  std::vector<std::int64_t> out;
  out.reserve(weeks.size());
  for (const Date& week : weeks) {
    const std::int64_t end_day = days_from_civil(week);
    std::int64_t sum = 0;
    std::vector<std::string> missing;
    for (std::int64_t day = end_day - 6; day <= end_day; ++day) {
      const auto it = by_day.find(day);
      if (it == by_day.end())
        missing.push_back(format_iso_date(civil_from_days(day)));
      else
        sum += it->second;
    }
    if (!missing.empty()) {
      std::ostringstream os;
      os << "weekly_cases: series '" << series.country
         << "' does not cover the week ending " << format_iso_date(week)
         << "; missing";
      for (const auto& m : missing) os << ' ' << m;
      throw ArgumentError(os.str());
    }
    out.push_back(sum);
  }
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ArgumentError("pearson: series lengths differ (" +
                        std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()) + ")");
  const std::size_t n = x.size();
  if (n < 3) throw ArgumentError("pearson: need at least 3 points");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ArgumentError("pearson: constant series, correlation not computable");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

CorrelationReport lagged_xcorr(std::span<const double> x, std::span<const double> y,
                               int max_lag) {
  if (x.size() != y.size())
    throw ArgumentError("lagged_xcorr: series must be aligned on the same weeks");
  if (max_lag < 0) throw ArgumentError("lagged_xcorr: max_lag must be >= 0");
  const auto n = static_cast<std::int64_t>(x.size());

  CorrelationReport report;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    // Overlap of x_t with y_{t+lag}.
    const std::int64_t t_begin = std::max<std::int64_t>(0, -lag);
    const std::int64_t t_end = std::min(n, n - lag);  // exclusive
    const std::int64_t count = t_end - t_begin;
    if (count < 3) continue;
    std::vector<double> xs, ys;
    xs.reserve(static_cast<std::size_t>(count));
    ys.reserve(static_cast<std::size_t>(count));
    for (std::int64_t t = t_begin; t < t_end; ++t) {
      xs.push_back(x[static_cast<std::size_t>(t)]);
      ys.push_back(y[static_cast<std::size_t>(t + lag)]);
    }
    double r;
    try {
      r = pearson(xs, ys);
    } catch (const ArgumentError&) {
      continue;  // constant window at this lag
    }
    report.lags.push_back(LagCorrelation{lag, r, static_cast<std::size_t>(count)});
  }
  if (report.lags.empty())
    throw ArgumentError("lagged_xcorr: no lag has a computable correlation");

  const LagCorrelation* best = &report.lags.front();
  for (const LagCorrelation& cand : report.lags) {
    if (cand.r > best->r) {
      best = &cand;
      continue;
    }
    if (cand.r < best->r) continue;
    // Equal r: prefer lag 0, then smaller |lag|, then the positive lag.
    const int ca = std::abs(cand.lag), ba = std::abs(best->lag);
    if (ca != ba ? ca < ba : cand.lag > best->lag) best = &cand;
  }
  report.best_lag = best->lag;
  return report;
}

}  // namespace covtrends
