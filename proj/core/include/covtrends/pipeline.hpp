// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs composing the modules: ingest -> keyword filter ->
// Tuesday sampling -> location tagging -> sentiment scoring -> weekly
// aggregation -> correlation -> CSV reports. These functions back the
// CLI subcommands; summaries go to the caller, data to files.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covtrends/config.hpp"
#include "covtrends/ingest.hpp"
#include "covtrends/lexicon.hpp"
#include "covtrends/train.hpp"

namespace covtrends {

struct RunSummary {
  SkipTally tally;                      // lines seen / malformed
  std::uint64_t matched_keywords = 0;   // records kept by the filter
  std::uint64_t sampled = 0;            // after Tuesday + random sampling
  std::uint64_t tagged = 0;             // sampled tweets with >= 1 country
  std::uint64_t n_pos = 0;
  std::uint64_t n_neg = 0;
  std::uint64_t n_neutral = 0;
  std::vector<std::string> files_written;
};

RunSummary run_pipeline(const PipelineConfig& cfg);

struct LexiconSummary {
  std::size_t entries = 0;
  std::size_t country_names = 0;
  std::size_t admin1_names = 0;
  std::size_t city_names = 0;
  std::string path;
};

LexiconSummary run_build_lexicon(const PipelineConfig& cfg);

struct TrainSummary {
  TrainConfig hp;
  LossTrace trace;
  double train_accuracy = 0.0;  // ensemble accuracy after the last epoch
  std::string model_path;
  std::string trace_path;
};

TrainSummary run_train(const PipelineConfig& cfg);

struct TagSummary {
  SkipTally tally;
  std::uint64_t tagged = 0;
  std::string out_path;
};

TagSummary run_tag(const PipelineConfig& cfg);

struct ScoreSummary {
  SkipTally tally;
  std::uint64_t unscorable = 0;  // zero-token texts
  std::uint64_t n_pos = 0;
  std::uint64_t n_neg = 0;
  std::uint64_t n_neutral = 0;
  std::string out_path;
};

ScoreSummary run_score(const PipelineConfig& cfg);

struct CorrelateSummary {
  std::size_t series = 0;
  std::size_t computable = 0;
  std::string out_path;
};

// Recomputes the lag sweep from the country_*.csv / global.csv files
// of a previous run in cfg.output_dir.
CorrelateSummary run_correlate(const PipelineConfig& cfg);

// The per-week subsample seed, derived from the run seed and the
// week's index in the Tuesday grid (documented in the README).
std::uint64_t week_seed(std::uint64_t run_seed, std::size_t week_index);

}  // namespace covtrends
