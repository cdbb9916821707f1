// SPDX-License-Identifier: Apache-2.0
//
// Deterministic synthetic fixtures shared by the unit and acceptance
// suites: GeoNames-style dumps, planted tweet corpora, case-count
// CSVs, toy training sets, and a hand-built marker classifier whose
// labels are exact by construction.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "covtrends/calendar.hpp"
#include "covtrends/countries.hpp"
#include "covtrends/sentiment.hpp"

namespace covtrends::testing {

// --- GeoNames-style dumps ---------------------------------------------

// Hand-built dumps over CA/FR/US/GB/DE: Toronto, Paris(FR), Paris(US),
// New York (admin1 + city), York(GB), Muenchen/Munich, Berlin, Cali,
// plus blocklist bait (Nice, Mobile, Along) and an accented admin1.
void write_small_geonames(const std::string& dir);

struct GeoFixture {
  // ISO code -> normalized city surfaces present in the dumps.
  std::map<std::string, std::vector<std::string>> cities;
  // ISO code -> normalized admin1 surfaces.
  std::map<std::string, std::vector<std::string>> admin1;
  // ISO code -> normalized country-name surface.
  std::map<std::string, std::string> country_names;
  std::size_t surface_count = 0;  // distinct (surface, country, kind)
};

// Realistic-scale dumps for the 32 default countries (~8-9k surfaces).
// Generated names are unique, never contain a keyword or marker
// substring, and include accented and multi-word forms.
GeoFixture write_fullscale_geonames(const std::string& dir, std::uint64_t seed);

// --- Sentiment markers and models --------------------------------------

// One marker token per class; any text containing exactly one marker
// is classified with certainty by make_marker_model().
extern const char* const kMarkerNegative;
extern const char* const kMarkerNeutral;
extern const char* const kMarkerPositive;

const char* marker_for(covtrends::SentimentLabel label);

// d=4 model over the reference encoder: the embedding table is zero
// except the three marker rows, attention puts ~all weight on the
// marker, and the heads read one coordinate per class. Exact argmax
// for any text containing one marker and no hash-colliding token.
covtrends::SentimentModel make_marker_model(std::size_t table_size);

// 21-example, 3-class linearly separable training set (dataset "toy").
std::vector<covtrends::LabeledExample> toy_training_set();

// The same set as a TSV using dataset id "sst" (labels 0/2/4).
std::string toy_training_tsv();

// --- Planted tweet corpora ---------------------------------------------

struct PlantedTweet {
  std::string id;
  covtrends::Date date;
  bool on_tuesday_grid = false;
  bool has_keyword = false;
  std::vector<std::string> countries;  // sorted unique ISO codes
  covtrends::SentimentLabel label = covtrends::SentimentLabel::Neutral;
  bool malformed = false;  // written as a truncated line
  std::string text;
};

struct TweetCorpus {
  std::vector<PlantedTweet> tweets;
  std::string jsonl;
};

// `places` is a flat (ISO code, display name) pool; display names must
// normalize to lexicon surfaces. malformed_fraction in [0, 1).
TweetCorpus make_planted_corpus(
    std::size_t n, std::uint64_t seed, const std::vector<covtrends::Date>& tuesdays,
    const std::vector<std::pair<std::string, std::string>>& places,
    double malformed_fraction);

// Flat (ISO, display-name) pool from a GeoFixture, capped per country.
std::vector<std::pair<std::string, std::string>> place_pool(const GeoFixture& geo,
                                                            std::size_t per_country);

// --- Case-count CSVs ----------------------------------------------------

// Wide cumulative CSV in the JHU layout (Province/State, Country/Region,
// Lat, Long, date columns) covering [first_day, last_day]. Some
// countries are split across several province rows; "Korea, South"
// exercises quoted fields.
std::string make_cases_csv(const std::vector<covtrends::CountryInfo>& countries,
                           const covtrends::Date& first_day,
                           const covtrends::Date& last_day, std::uint64_t seed);

}  // namespace covtrends::testing
