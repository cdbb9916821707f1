// SPDX-License-Identifier: Apache-2.0
//
// One serializable record of all run parameters: a TOML-style
// key = value file, overridable by CLI flags (flags win). Every random
// decision in a run flows from the single seed.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "covtrends/calendar.hpp"
#include "covtrends/train.hpp"

namespace covtrends {

struct PipelineConfig {
  // Input/output paths.
  std::string tweets_path;
  std::string geonames_dir;
  std::string blocklist_path;
  std::string cases_path;
  std::string lexicon_path;
  std::string model_path;
  std::string train_data_path;
  std::string output_dir = "out";

  // Sampling window and protocol.
  Date start{2020, 3, 23};
  Date end{2020, 6, 23};
  std::vector<std::string> keywords;   // empty -> KeywordSet::defaults()
  std::vector<std::string> countries;  // empty -> default_country_codes()
  std::uint64_t sample_size = 150000;
  std::uint64_t seed = 1;
  int max_lag = 4;

  // Model shape and training hyperparameters.
  std::size_t encoder_dim = 64;
  std::size_t table_size = 1u << 16;
  double learning_rate = 0.0005;
  std::size_t batch_size = 32;
  std::size_t epochs = 12;
  std::array<std::string, 3> head_datasets = {"sst", "semeval15-t10",
                                              "semeval15-t11"};

  std::vector<std::string> effective_keywords() const;
  std::vector<std::string> effective_countries() const;
  TrainConfig train_config() const;
};

// Parses `key = value` lines ('#' comments, optional double quotes,
// comma-separated lists) and applies them over `base`. Unknown keys
// are a FormatError naming the key and line.
PipelineConfig parse_config(std::istream& in, const PipelineConfig& base);
PipelineConfig load_config_file(const std::string& path, const PipelineConfig& base);

}  // namespace covtrends
