// SPDX-License-Identifier: Apache-2.0

#include "covtrends/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "covtrends/csv.hpp"
#include "covtrends/errors.hpp"
#include "covtrends/rng.hpp"

namespace covtrends {

namespace {

std::string ascii_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

SkipTally for_each_tweet(std::istream& in,
                         const std::function<void(TweetRecord&&)>& sink) {
  SkipTally tally;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    ++tally.lines;

    const auto doc = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
      ++tally.skipped;
      continue;
    }
    const auto id = doc.find("id");
    const auto created_at = doc.find("created_at");
    const auto text = doc.find("text");
    if (id == doc.end() || created_at == doc.end() || text == doc.end() ||
        !id->is_string() || !created_at->is_string() || !text->is_string()) {
      ++tally.skipped;
      continue;
    }
    auto id_str = id->get<std::string>();
    auto text_str = text->get<std::string>();
    const auto ts = parse_iso_timestamp(created_at->get<std::string>());
    if (id_str.empty() || text_str.empty() || !ts) {
      ++tally.skipped;
      continue;
    }
    sink(TweetRecord{std::move(id_str), *ts, std::move(text_str)});
  }
  if (in.bad()) throw IoError("tweet stream: read failure");
  return tally;
}

IngestResult read_tweets(std::istream& in) {
  IngestResult result;
  result.tally = for_each_tweet(
      in, [&](TweetRecord&& rec) { result.records.push_back(std::move(rec)); });
  return result;
}

IngestResult read_tweets_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tweet file: " + path);
  return read_tweets(in);
}

KeywordSet KeywordSet::from_words(const std::vector<std::string>& words) {
  if (words.empty()) throw ArgumentError("keyword set must be non-empty");
  KeywordSet ks;
  std::set<std::string> seen;
  for (const auto& w : words) {
    std::string folded = ascii_fold(w);
    if (folded.empty()) throw ArgumentError("keyword entries must be non-empty");
    if (!seen.insert(folded).second)
      throw ArgumentError("duplicate keyword: " + folded);
    ks.keywords_.push_back(std::move(folded));
  }
  return ks;
}

KeywordSet KeywordSet::defaults() {
  return from_words(
      {"corona", "coronavirus", "pandemic", "sarscov2", "covid", "covid19"});
}

bool KeywordSet::matches(std::string_view text) const {
  const std::string folded = ascii_fold(text);
  for (const auto& kw : keywords_)
    if (folded.find(kw) != std::string::npos) return true;
  return false;
}

std::vector<TweetRecord> filter_keywords(const std::vector<TweetRecord>& records,
                                         const KeywordSet& ks) {
  std::vector<TweetRecord> kept;
  for (const auto& rec : records)
    if (ks.matches(rec.text)) kept.push_back(rec);
  return kept;
}

std::map<Date, std::vector<TweetRecord>> sample_tuesdays(
    const std::vector<TweetRecord>& records, const Date& start, const Date& end) {
  std::map<Date, std::vector<TweetRecord>> buckets;
  for (const Date& tuesday : tuesdays_in_range(start, end)) buckets[tuesday];
  for (const auto& rec : records) {
    const auto it = buckets.find(rec.timestamp.date());
    if (it != buckets.end()) it->second.push_back(rec);
  }
  return buckets;
}

std::vector<TweetRecord> sample_random(const std::vector<TweetRecord>& records,
                                       std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("sample_random: n must be >= 1");
  if (n >= records.size()) return records;

  std::vector<std::size_t> idx(records.size());
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  std::vector<TweetRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
    out.push_back(records[idx[i]]);
  }
  return out;
}

namespace {

std::string cell_name(std::size_t row, std::size_t col, const std::string& header) {
  std::ostringstream os;
  os << "row " << row << ", column " << col + 1;
  if (!header.empty()) os << " ('" << header << "')";
  return os.str();
}

}  // namespace

std::map<std::string, CaseSeries> read_case_series(
    std::istream& in, const std::vector<std::string>& countries) {
  CsvReader reader(in);
  const auto header = reader.next_row();
  if (!header || header->size() < 2)
    throw FormatError("case CSV: missing or too-short header row");

  // Leading region columns, then date columns to the end of the row.
  std::size_t first_date_col = header->size();
  for (std::size_t i = 0; i < header->size(); ++i) {
    if (parse_mdy_date((*header)[i])) {
      first_date_col = i;
      break;
    }
  }
  if (first_date_col == header->size())
    throw FormatError("case CSV: header has no M/D/YY date columns");

  std::vector<Date> dates;
  for (std::size_t i = first_date_col; i < header->size(); ++i) {
    const auto d = parse_mdy_date((*header)[i]);
    if (!d)
      throw FormatError("case CSV: non-date header cell after date columns at " +
                        cell_name(1, i, (*header)[i]));
    if (!dates.empty() && days_from_civil(*d) != days_from_civil(dates.back()) + 1)
      throw FormatError("case CSV: date columns not contiguous daily at " +
                        cell_name(1, i, (*header)[i]));
    dates.push_back(*d);
  }

  std::size_t country_col = first_date_col;  // sentinel: not found
  for (std::size_t i = 0; i < first_date_col; ++i) {
    const std::string name = ascii_fold((*header)[i]);
    if (name == "country/region" || name == "country_region" || name == "country") {
      country_col = i;
      break;
    }
  }
  if (country_col == first_date_col) {
    if (first_date_col == 1)
      country_col = 0;  // single region column
    else
      throw FormatError("case CSV: no country column among region columns");
  }

  const std::set<std::string> wanted(countries.begin(), countries.end());
  std::map<std::string, std::vector<std::int64_t>> cumulative;
  std::size_t row_no = 1;
  while (auto row = reader.next_row()) {
    ++row_no;
    if (row->size() == 1 && (*row)[0].empty()) continue;  // trailing blank line
    if (row->size() != header->size())
      throw FormatError("case CSV: row " + std::to_string(row_no) + " has " +
                        std::to_string(row->size()) + " cells, header has " +
                        std::to_string(header->size()));
    const std::string& country = (*row)[country_col];
    if (!wanted.empty() && !wanted.contains(country)) continue;

    auto& acc = cumulative[country];
    acc.resize(dates.size(), 0);
    for (std::size_t i = first_date_col; i < row->size(); ++i) {
      const std::string& cell = (*row)[i];
      std::int64_t value = 0;
      bool ok = !cell.empty();
      for (char c : cell) {
        if (c < '0' || c > '9') {
          ok = false;
          break;
        }
        value = value * 10 + (c - '0');
      }
      if (!ok)
        throw FormatError("case CSV: unparseable count '" + cell + "' at " +
                          cell_name(row_no, i, (*header)[i]));
      acc[i - first_date_col] += value;
    }
  }

  std::map<std::string, CaseSeries> out;
  for (auto& [country, cum] : cumulative) {
    CaseSeries series;
    series.country = country;
    series.dates = dates;
    series.daily_new_cases.reserve(cum.size());
    for (std::size_t i = 0; i < cum.size(); ++i) {
      // First value taken as-is; downward revisions clamp to 0.
      const std::int64_t diff = i == 0 ? cum[0] : cum[i] - cum[i - 1];
      series.daily_new_cases.push_back(std::max<std::int64_t>(0, diff));
    }
    out.emplace(country, std::move(series));
  }
  return out;
}

std::map<std::string, CaseSeries> read_case_series_file(
    const std::string& path, const std::vector<std::string>& countries) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open case CSV: " + path);
  return read_case_series(in, countries);
}

}  // namespace covtrends
