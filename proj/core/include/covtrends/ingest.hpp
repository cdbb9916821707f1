// SPDX-License-Identifier: Apache-2.0
//
// File-based ingestion: JSON Lines tweet dumps, the keyword filter,
// the Tuesday bucketing + seeded random subsampling protocol, and the
// wide cumulative case-count CSV reader.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "covtrends/calendar.hpp"

namespace covtrends {

struct TweetRecord {
  std::string id;      // non-empty, opaque
  UtcTime timestamp;   // UTC, second precision
  std::string text;    // non-empty

  bool operator==(const TweetRecord&) const = default;
};

struct SkipTally {
  std::uint64_t lines = 0;    // non-blank lines seen
  std::uint64_t skipped = 0;  // malformed lines (bad JSON, missing or
                              // invalid id/created_at/text)
};

struct IngestResult {
  std::vector<TweetRecord> records;
  SkipTally tally;
};

// Streams newline-delimited JSON objects, invoking `sink` once per
// well-formed record in input order. Malformed lines are tallied and
// skipped, never fatal; blank lines are ignored. Throws IoError if the
// stream goes bad mid-read.
SkipTally for_each_tweet(std::istream& in,
                         const std::function<void(TweetRecord&&)>& sink);

IngestResult read_tweets(std::istream& in);
IngestResult read_tweets_file(const std::string& path);

class KeywordSet {
 public:
  // Case-folds, rejects empty/duplicate entries.
  static KeywordSet from_words(const std::vector<std::string>& words);
  // corona, coronavirus, pandemic, sarscov2, covid, covid19
  static KeywordSet defaults();

  const std::vector<std::string>& keywords() const { return keywords_; }

  // Case-folded substring containment: "corona" matches inside
  // "coronavirus". Folding is ASCII-only; the keywords themselves are
  // plain ASCII.
  bool matches(std::string_view text) const;

 private:
  std::vector<std::string> keywords_;
};

// Keeps the records whose text matches at least one keyword; a record
// matching several keywords is emitted once. Order preserved.
std::vector<TweetRecord> filter_keywords(const std::vector<TweetRecord>& records,
                                         const KeywordSet& ks);

// Buckets records by Tuesday date. Keys are exactly the Tuesdays in
// [start, end] (possibly with empty lists); records whose UTC date is
// not one of those Tuesdays are discarded.
std::map<Date, std::vector<TweetRecord>> sample_tuesdays(
    const std::vector<TweetRecord>& records, const Date& start, const Date& end);

// Uniform sample of n records without replacement (partial
// Fisher-Yates over SplitMix64). n >= population returns the input
// unchanged. Pure function of (records, n, seed).
std::vector<TweetRecord> sample_random(const std::vector<TweetRecord>& records,
                                       std::size_t n, std::uint64_t seed);

struct CaseSeries {
  std::string country;
  std::vector<Date> dates;                     // contiguous daily
  std::vector<std::int64_t> daily_new_cases;   // >= 0, same length
};

// Reads a wide cumulative time-series CSV (one row per region, one
// column per M/D/YY date). Rows of the same country are summed, then
// cumulative counts are differenced into daily new cases with negative
// diffs clamped to 0. `countries` filters by the CSV's country-column
// value; empty keeps every country.
std::map<std::string, CaseSeries> read_case_series(
    std::istream& in, const std::vector<std::string>& countries);

std::map<std::string, CaseSeries> read_case_series_file(
    const std::string& path, const std::vector<std::string>& countries);

}  // namespace covtrends
