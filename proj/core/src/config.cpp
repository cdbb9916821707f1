// SPDX-License-Identifier: Apache-2.0

#include "covtrends/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "covtrends/countries.hpp"
#include "covtrends/errors.hpp"
#include "covtrends/ingest.hpp"

namespace covtrends {

std::vector<std::string> PipelineConfig::effective_keywords() const {
  if (!keywords.empty()) return keywords;
  return KeywordSet::defaults().keywords();
}

std::vector<std::string> PipelineConfig::effective_countries() const {
  if (!countries.empty()) return countries;
  return default_country_codes();
}

TrainConfig PipelineConfig::train_config() const {
  return TrainConfig{learning_rate, batch_size, epochs, seed};
}

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = value.find(',', pos);
    const std::string item =
        trim(value.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (!item.empty()) items.push_back(unquote(item));
    if (comma == std::string::npos) return items;
    pos = comma + 1;
  }
}

}  // namespace

PipelineConfig parse_config(std::istream& in, const PipelineConfig& base) {
  PipelineConfig cfg = base;
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) -> void {
    throw FormatError("config line " + std::to_string(line_no) + ": " + what);
  };
  auto to_u64 = [&](const std::string& v) -> std::uint64_t {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      fail("expected unsigned integer, got '" + v + "'");
    return out;
  };
  auto to_int = [&](const std::string& v) -> int {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      fail("expected integer, got '" + v + "'");
    return out;
  };
  auto to_double = [&](const std::string& v) -> double {
    try {
      std::size_t used = 0;
      const double out = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return out;
    } catch (const std::exception&) {
      fail("expected number, got '" + v + "'");
    }
    return 0.0;
  };
  auto to_date = [&](const std::string& v) -> Date {
    const auto d = parse_iso_date(v);
    if (!d) fail("expected YYYY-MM-DD date, got '" + v + "'");
    return *d;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = unquote(trim(stripped.substr(eq + 1)));
    if (key.empty()) fail("empty key");

    if (key == "tweets") cfg.tweets_path = value;
    else if (key == "geonames_dir") cfg.geonames_dir = value;
    else if (key == "blocklist") cfg.blocklist_path = value;
    else if (key == "cases") cfg.cases_path = value;
    else if (key == "lexicon") cfg.lexicon_path = value;
    else if (key == "model") cfg.model_path = value;
    else if (key == "train_data") cfg.train_data_path = value;
    else if (key == "output") cfg.output_dir = value;
    else if (key == "start") cfg.start = to_date(value);
    else if (key == "end") cfg.end = to_date(value);
    else if (key == "keywords") cfg.keywords = split_list(value);
    else if (key == "countries") cfg.countries = split_list(value);
    else if (key == "sample_size") cfg.sample_size = to_u64(value);
    else if (key == "seed") cfg.seed = to_u64(value);
    else if (key == "max_lag") cfg.max_lag = to_int(value);
    else if (key == "dim") cfg.encoder_dim = to_u64(value);
    else if (key == "table_size") cfg.table_size = to_u64(value);
    else if (key == "lr") cfg.learning_rate = to_double(value);
    else if (key == "batch_size") cfg.batch_size = to_u64(value);
    else if (key == "epochs") cfg.epochs = to_u64(value);
    else if (key == "head_datasets") {
      const auto items = split_list(value);
      if (items.size() != 3) fail("head_datasets needs exactly 3 entries");
      cfg.head_datasets = {items[0], items[1], items[2]};
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return cfg;
}

PipelineConfig load_config_file(const std::string& path, const PipelineConfig& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  return parse_config(in, base);
}

}  // namespace covtrends
