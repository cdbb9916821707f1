// SPDX-License-Identifier: Apache-2.0

#include "covtrends/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "covtrends/countries.hpp"
#include "covtrends/csv.hpp"
#include "covtrends/errors.hpp"
#include "covtrends/matcher.hpp"
#include "covtrends/model_io.hpp"
#include "covtrends/report.hpp"
#include "covtrends/rng.hpp"
#include "covtrends/trends.hpp"

namespace covtrends {

namespace {

void require_path(const std::string& value, const char* key) {
  if (value.empty())
    throw ArgumentError(std::string("missing required path: ") + key);
}

std::vector<std::string> unique_tag_countries(const std::vector<LocationTag>& tags) {
  std::set<std::string> set;
  for (const auto& tag : tags) set.insert(tag.country);
  return {set.begin(), set.end()};
}

std::string series_csv_name(const std::string& country) {
  return country == kGlobalCode ? std::string("global.csv")
                                : "country_" + country + ".csv";
}

}  // namespace

std::uint64_t week_seed(std::uint64_t run_seed, std::size_t week_index) {
  return mix64(run_seed ^ (0x7765656BULL + week_index));  // "week" + index
}

RunSummary run_pipeline(const PipelineConfig& cfg) {
  require_path(cfg.tweets_path, "tweets");
  require_path(cfg.lexicon_path, "lexicon");
  require_path(cfg.model_path, "model");
  require_path(cfg.cases_path, "cases");
  if (cfg.sample_size == 0) throw ArgumentError("sample_size must be >= 1");

  const KeywordSet keywords = KeywordSet::from_words(cfg.effective_keywords());
  const std::vector<std::string> countries = cfg.effective_countries();

  // Stream the dump, keeping only keyword matches.
  RunSummary summary;
  std::vector<TweetRecord> matched;
  {
    std::ifstream in(cfg.tweets_path, std::ios::binary);
    if (!in) throw IoError("cannot open tweet file: " + cfg.tweets_path);
    summary.tally = for_each_tweet(in, [&](TweetRecord&& rec) {
      if (keywords.matches(rec.text)) matched.push_back(std::move(rec));
    });
  }
  summary.matched_keywords = matched.size();

  const std::vector<Date> weeks = tuesdays_in_range(cfg.start, cfg.end);
  auto buckets_by_week = sample_tuesdays(matched, cfg.start, cfg.end);

  const Matcher matcher = Matcher::compile(load_lexicon_tsv_file(cfg.lexicon_path));
  const SentimentModel model = load_model(cfg.model_path);

  std::vector<ScoredTweet> scored;
  for (std::size_t w = 0; w < weeks.size(); ++w) {
    const auto& bucket = buckets_by_week.at(weeks[w]);
    const auto picked =
        sample_random(bucket, cfg.sample_size, week_seed(cfg.seed, w));
    for (const TweetRecord& rec : picked) {
      ScoredTweet st;
      st.countries = unique_tag_countries(matcher.tag_locations(rec.text));
      st.label = classify(model, rec.text).final_label;
      st.record = rec;
      if (!st.countries.empty()) ++summary.tagged;
      switch (st.label) {
        case SentimentLabel::Positive: ++summary.n_pos; break;
        case SentimentLabel::Negative: ++summary.n_neg; break;
        case SentimentLabel::Neutral: ++summary.n_neutral; break;
      }
      scored.push_back(std::move(st));
    }
  }
  summary.sampled = scored.size();

  ReportInputs report;
  report.weeks = weeks;
  report.countries = countries;
  report.buckets = aggregate_weekly(scored, weeks, countries);

  // Official case series, keyed back to ISO codes.
  std::vector<std::string> case_names;
  std::vector<std::pair<std::string, std::string>> iso_to_name;
  for (const auto& iso : countries) {
    const auto info = country_by_code(iso);
    const std::string name = info ? info->case_name : iso;
    case_names.push_back(name);
    iso_to_name.emplace_back(iso, name);
  }
  const auto series_by_name = read_case_series_file(cfg.cases_path, case_names);
  bool all_have_series = true;
  for (const auto& [iso, name] : iso_to_name) {
    const auto it = series_by_name.find(name);
    if (it == series_by_name.end()) {
      all_have_series = false;
      continue;
    }
    report.cases[iso] = weekly_cases(it->second, weeks);
  }
  if (all_have_series && !iso_to_name.empty()) {
    std::vector<std::int64_t> global(weeks.size(), 0);
    for (const auto& [iso, name] : iso_to_name)
      for (std::size_t w = 0; w < weeks.size(); ++w)
        global[w] += report.cases.at(iso)[w];
    report.cases[kGlobalCode] = std::move(global);
  }

  // Per-country tweet-frequency series from the buckets.
  std::map<std::string, std::vector<double>> totals;
  for (const WeeklyBucket& b : report.buckets) {
    auto& series = totals[b.country];
    if (series.empty()) series.resize(weeks.size(), 0.0);
    const auto it = std::find(weeks.begin(), weeks.end(), b.week);
    series[static_cast<std::size_t>(it - weeks.begin())] =
        static_cast<double>(b.n_total);
  }
  std::vector<std::string> corr_countries = countries;
  std::sort(corr_countries.begin(), corr_countries.end());
  corr_countries.push_back(kGlobalCode);
  for (const auto& country : corr_countries) {
    CountryCorrelation cc;
    cc.country = country;
    const auto cases_it = report.cases.find(country);
    if (cases_it != report.cases.end()) {
      std::vector<double> y(cases_it->second.begin(), cases_it->second.end());
      try {
        CorrelationReport r = lagged_xcorr(totals.at(country), y, cfg.max_lag);
        r.country = country;
        cc.report = std::move(r);
      } catch (const ArgumentError&) {
        cc.report = std::nullopt;  // constant or too-short series
      }
    }
    report.correlations.push_back(std::move(cc));
  }

  summary.files_written = emit_report(report, cfg.output_dir);
  return summary;
}

LexiconSummary run_build_lexicon(const PipelineConfig& cfg) {
  require_path(cfg.geonames_dir, "geonames_dir");
  require_path(cfg.lexicon_path, "lexicon");
  const std::set<std::string> blocklist =
      cfg.blocklist_path.empty() ? std::set<std::string>{}
                                 : load_blocklist_file(cfg.blocklist_path);
  const Lexicon lex = build_lexicon(geonames_sources_in_dir(cfg.geonames_dir),
                                    cfg.effective_countries(), blocklist);
  save_lexicon_tsv_file(lex, cfg.lexicon_path);
  LexiconSummary summary;
  summary.entries = lex.entries.size();
  summary.country_names = lex.count_of(EntryKind::Country);
  summary.admin1_names = lex.count_of(EntryKind::Admin1);
  summary.city_names = lex.count_of(EntryKind::City);
  summary.path = cfg.lexicon_path;
  return summary;
}

TrainSummary run_train(const PipelineConfig& cfg) {
  require_path(cfg.train_data_path, "train_data");
  require_path(cfg.model_path, "model");

  const auto examples = read_labeled_tsv_file(cfg.train_data_path);
  SentimentModel model = make_reference_model(cfg.encoder_dim, cfg.table_size,
                                              cfg.seed, cfg.head_datasets);
  TrainSummary summary;
  summary.hp = cfg.train_config();
  summary.trace = train(model, examples, summary.hp);

  std::size_t correct = 0;
  for (const auto& ex : examples)
    if (classify(model, ex.text).final_label == ex.label) ++correct;
  summary.train_accuracy =
      examples.empty() ? 0.0
                       : static_cast<double>(correct) / static_cast<double>(examples.size());

  save_model(model, cfg.model_path);
  summary.model_path = cfg.model_path;

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  summary.trace_path = cfg.output_dir + "/loss_trace.csv";
  std::ofstream out(summary.trace_path, std::ios::binary);
  if (!out) throw IoError("cannot write loss trace: " + summary.trace_path);
  write_csv_row(out, {"epoch", "head0_loss", "head1_loss", "head2_loss",
                      "train_accuracy"});
  char buf[32];
  for (std::size_t e = 0; e < summary.trace.per_epoch.size(); ++e) {
    std::vector<std::string> row{std::to_string(e + 1)};
    for (double loss : summary.trace.per_epoch[e]) {
      std::snprintf(buf, sizeof(buf), "%.9g", loss);
      row.emplace_back(buf);
    }
    // Accuracy is evaluated once, after the final epoch.
    if (e + 1 == summary.trace.per_epoch.size()) {
      std::snprintf(buf, sizeof(buf), "%.9g", summary.train_accuracy);
      row.emplace_back(buf);
    } else {
      row.emplace_back("");
    }
    write_csv_row(out, row);
  }
  out.flush();
  if (!out) throw IoError("failed writing loss trace: " + summary.trace_path);
  return summary;
}

TagSummary run_tag(const PipelineConfig& cfg) {
  require_path(cfg.tweets_path, "tweets");
  require_path(cfg.lexicon_path, "lexicon");
  const Matcher matcher = Matcher::compile(load_lexicon_tsv_file(cfg.lexicon_path));

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  TagSummary summary;
  summary.out_path = cfg.output_dir + "/tags.csv";
  std::ofstream out(summary.out_path, std::ios::binary);
  if (!out) throw IoError("cannot write tags: " + summary.out_path);
  write_csv_row(out, {"id", "country", "kind", "surface", "begin", "end"});

  std::ifstream in(cfg.tweets_path, std::ios::binary);
  if (!in) throw IoError("cannot open tweet file: " + cfg.tweets_path);
  summary.tally = for_each_tweet(in, [&](TweetRecord&& rec) {
    const auto tags = matcher.tag_locations(rec.text);
    if (!tags.empty()) ++summary.tagged;
    for (const LocationTag& tag : tags) {
      write_csv_row(out, {rec.id, tag.country, std::string(to_string(tag.kind)),
                          tag.matched_surface, std::to_string(tag.src_begin),
                          std::to_string(tag.src_end)});
    }
  });
  out.flush();
  if (!out) throw IoError("failed writing tags: " + summary.out_path);
  return summary;
}

ScoreSummary run_score(const PipelineConfig& cfg) {
  require_path(cfg.tweets_path, "tweets");
  require_path(cfg.model_path, "model");
  const SentimentModel model = load_model(cfg.model_path);

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  ScoreSummary summary;
  summary.out_path = cfg.output_dir + "/scores.csv";
  std::ofstream out(summary.out_path, std::ios::binary);
  if (!out) throw IoError("cannot write scores: " + summary.out_path);
  write_csv_row(out, {"id", "head0", "head1", "head2", "final"});

  std::ifstream in(cfg.tweets_path, std::ios::binary);
  if (!in) throw IoError("cannot open tweet file: " + cfg.tweets_path);
  summary.tally = for_each_tweet(in, [&](TweetRecord&& rec) {
    Classification c;
    try {
      c = classify(model, rec.text);
    } catch (const EmptyInputError&) {
      ++summary.unscorable;
      return;
    }
    switch (c.final_label) {
      case SentimentLabel::Positive: ++summary.n_pos; break;
      case SentimentLabel::Negative: ++summary.n_neg; break;
      case SentimentLabel::Neutral: ++summary.n_neutral; break;
    }
    write_csv_row(out, {rec.id, std::string(to_string(c.per_head[0])),
                        std::string(to_string(c.per_head[1])),
                        std::string(to_string(c.per_head[2])),
                        std::string(to_string(c.final_label))});
  });
  out.flush();
  if (!out) throw IoError("failed writing scores: " + summary.out_path);
  return summary;
}

namespace {

// Reads week/n_total/weekly_cases back from a previous run's series
// CSV; blank case cells mean no official series was available.
struct SeriesFile {
  std::vector<double> totals;
  std::vector<double> cases;
  bool has_cases = true;
};

SeriesFile read_series_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open series CSV: " + path);
  CsvReader reader(in);
  const auto header = reader.next_row();
  if (!header || header->size() < 6 || (*header)[0] != "week" ||
      (*header)[1] != "n_total" || (*header)[5] != "weekly_cases")
    throw FormatError("series CSV: unexpected header in " + path);
  SeriesFile s;
  while (auto row = reader.next_row()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != header->size())
      throw FormatError("series CSV: ragged row in " + path);
    s.totals.push_back(std::stod((*row)[1]));
    if ((*row)[5].empty()) {
      s.has_cases = false;
      s.cases.push_back(0.0);
    } else {
      s.cases.push_back(std::stod((*row)[5]));
    }
  }
  return s;
}

}  // namespace

CorrelateSummary run_correlate(const PipelineConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.output_dir);
  if (!fs::is_directory(dir))
    throw IoError("correlate: output directory not found: " + cfg.output_dir);

  std::vector<std::string> countries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("country_") && name.ends_with(".csv"))
      countries.push_back(name.substr(8, name.size() - 12));
  }
  countries.push_back(kGlobalCode);
  std::sort(countries.begin(), countries.end());

  CorrelateSummary summary;
  std::vector<CountryCorrelation> correlations;
  for (const auto& country : countries) {
    const SeriesFile s =
        read_series_csv((dir / series_csv_name(country)).string());
    ++summary.series;
    CountryCorrelation cc;
    cc.country = country;
    if (s.has_cases) {
      try {
        CorrelationReport r = lagged_xcorr(s.totals, s.cases, cfg.max_lag);
        r.country = country;
        cc.report = std::move(r);
        ++summary.computable;
      } catch (const ArgumentError&) {
        cc.report = std::nullopt;
      }
    }
    correlations.push_back(std::move(cc));
  }

  summary.out_path = (dir / "correlations.csv").string();
  std::ofstream out(summary.out_path, std::ios::binary);
  if (!out) throw IoError("cannot write correlations: " + summary.out_path);
  write_csv_row(out, {"country", "lag", "r", "n", "best_lag"});
  for (const auto& cc : correlations) {
    if (!cc.report) {
      write_csv_row(out, {cc.country, "", "NOT-COMPUTABLE", "", ""});
      continue;
    }
    char buf[32];
    for (const LagCorrelation& lc : cc.report->lags) {
      std::snprintf(buf, sizeof(buf), "%.6f", lc.r);
      write_csv_row(out, {cc.country, std::to_string(lc.lag), buf,
                          std::to_string(lc.n),
                          lc.lag == cc.report->best_lag ? "1" : "0"});
    }
  }
  out.flush();
  if (!out) throw IoError("failed writing correlations: " + summary.out_path);
  return summary;
}

}  // namespace covtrends
