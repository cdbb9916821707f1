// SPDX-License-Identifier: Apache-2.0
//
// covtrends CLI: compose the pipeline from the command line. Data goes
// to files; summaries go to stderr. Exit codes: 0 success, 1 I/O,
// 2 format/argument errors.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covtrends/config.hpp"
#include "covtrends/errors.hpp"
#include "covtrends/pipeline.hpp"

namespace {

using covtrends::PipelineConfig;

// Flag values land here; only flags the user actually passed override
// the config file.
struct FlagValues {
  std::string config_path;
  std::string tweets, geonames_dir, blocklist, cases, lexicon, model, train_data,
      output;
  std::string start, end;
  std::vector<std::string> keywords, countries, head_datasets;
  std::uint64_t seed = 0, sample_size = 0, dim = 0, table_size = 0, batch_size = 0,
                epochs = 0;
  int max_lag = 0;
  double lr = 0.0;
};

void add_common_options(CLI::App* cmd, FlagValues* f) {
  cmd->add_option("--config", f->config_path, "TOML-style key = value config file");
  cmd->add_option("--tweets", f->tweets, "JSON Lines tweet dump");
  cmd->add_option("--geonames-dir", f->geonames_dir,
                  "directory with countryInfo.txt, admin1CodesASCII.txt, "
                  "cities15000.txt");
  cmd->add_option("--blocklist", f->blocklist, "newline-delimited blocklist file");
  cmd->add_option("--cases", f->cases, "wide cumulative case-count CSV");
  cmd->add_option("--lexicon", f->lexicon, "lexicon TSV path");
  cmd->add_option("--model", f->model, "model file path");
  cmd->add_option("--train-data", f->train_data,
                  "training TSV (dataset, label, text)");
  cmd->add_option("--output", f->output, "output directory");
  cmd->add_option("--start", f->start, "range start (YYYY-MM-DD)");
  cmd->add_option("--end", f->end, "range end (YYYY-MM-DD)");
  cmd->add_option("--keywords", f->keywords, "keyword filter terms")
      ->delimiter(',');
  cmd->add_option("--countries", f->countries, "ISO-3166 alpha-2 codes")
      ->delimiter(',');
  cmd->add_option("--seed", f->seed, "run seed (all randomness derives from it)");
  cmd->add_option("--sample-size", f->sample_size, "per-Tuesday random subsample");
  cmd->add_option("--max-lag", f->max_lag, "correlation lag sweep half-width");
  cmd->add_option("--dim", f->dim, "encoder dimension");
  cmd->add_option("--table-size", f->table_size, "embedding table size");
  cmd->add_option("--lr", f->lr, "learning rate");
  cmd->add_option("--batch-size", f->batch_size, "mini-batch size");
  cmd->add_option("--epochs", f->epochs, "training epochs");
  cmd->add_option("--head-datasets", f->head_datasets,
                  "dataset ids for the three heads")
      ->delimiter(',');
}

PipelineConfig resolve_config(const CLI::App& cmd, const FlagValues& f) {
  PipelineConfig cfg;
  if (cmd.count("--config")) cfg = covtrends::load_config_file(f.config_path, cfg);

  auto date_flag = [](const std::string& value, const char* flag) {
    const auto d = covtrends::parse_iso_date(value);
    if (!d)
      throw covtrends::ArgumentError(std::string(flag) +
                                     ": expected YYYY-MM-DD, got '" + value + "'");
    return *d;
  };

  if (cmd.count("--tweets")) cfg.tweets_path = f.tweets;
  if (cmd.count("--geonames-dir")) cfg.geonames_dir = f.geonames_dir;
  if (cmd.count("--blocklist")) cfg.blocklist_path = f.blocklist;
  if (cmd.count("--cases")) cfg.cases_path = f.cases;
  if (cmd.count("--lexicon")) cfg.lexicon_path = f.lexicon;
  if (cmd.count("--model")) cfg.model_path = f.model;
  if (cmd.count("--train-data")) cfg.train_data_path = f.train_data;
  if (cmd.count("--output")) cfg.output_dir = f.output;
  if (cmd.count("--start")) cfg.start = date_flag(f.start, "--start");
  if (cmd.count("--end")) cfg.end = date_flag(f.end, "--end");
  if (cmd.count("--keywords")) cfg.keywords = f.keywords;
  if (cmd.count("--countries")) cfg.countries = f.countries;
  if (cmd.count("--seed")) cfg.seed = f.seed;
  if (cmd.count("--sample-size")) cfg.sample_size = f.sample_size;
  if (cmd.count("--max-lag")) cfg.max_lag = f.max_lag;
  if (cmd.count("--dim")) cfg.encoder_dim = f.dim;
  if (cmd.count("--table-size")) cfg.table_size = f.table_size;
  if (cmd.count("--lr")) cfg.learning_rate = f.lr;
  if (cmd.count("--batch-size")) cfg.batch_size = f.batch_size;
  if (cmd.count("--epochs")) cfg.epochs = f.epochs;
  if (cmd.count("--head-datasets")) {
    if (f.head_datasets.size() != 3)
      throw covtrends::ArgumentError("--head-datasets needs exactly 3 entries");
    cfg.head_datasets = {f.head_datasets[0], f.head_datasets[1],
                         f.head_datasets[2]};
  }
  return cfg;
}

int dispatch(const std::string& subcommand, const PipelineConfig& cfg) {
  if (subcommand == "build-lexicon") {
    const auto s = covtrends::run_build_lexicon(cfg);
    std::fprintf(stderr,
                 "build-lexicon: %zu entries (countries=%zu admin1=%zu "
                 "cities=%zu) -> %s\n",
                 s.entries, s.country_names, s.admin1_names, s.city_names,
                 s.path.c_str());
    return 0;
  }
  if (subcommand == "train") {
    const auto s = covtrends::run_train(cfg);
    std::fprintf(stderr,
                 "train: lr=%g batch=%zu epochs=%zu accuracy=%.4f -> %s "
                 "(trace %s)\n",
                 s.hp.learning_rate, s.hp.batch_size, s.hp.epochs,
                 s.train_accuracy, s.model_path.c_str(), s.trace_path.c_str());
    return 0;
  }
  if (subcommand == "tag") {
    const auto s = covtrends::run_tag(cfg);
    std::fprintf(stderr, "tag: lines=%llu skipped=%llu tagged=%llu -> %s\n",
                 static_cast<unsigned long long>(s.tally.lines),
                 static_cast<unsigned long long>(s.tally.skipped),
                 static_cast<unsigned long long>(s.tagged), s.out_path.c_str());
    return 0;
  }
  if (subcommand == "score") {
    const auto s = covtrends::run_score(cfg);
    std::fprintf(stderr,
                 "score: lines=%llu skipped=%llu unscorable=%llu pos=%llu "
                 "neg=%llu neutral=%llu -> %s\n",
                 static_cast<unsigned long long>(s.tally.lines),
                 static_cast<unsigned long long>(s.tally.skipped),
                 static_cast<unsigned long long>(s.unscorable),
                 static_cast<unsigned long long>(s.n_pos),
                 static_cast<unsigned long long>(s.n_neg),
                 static_cast<unsigned long long>(s.n_neutral), s.out_path.c_str());
    return 0;
  }
  if (subcommand == "run") {
    const auto s = covtrends::run_pipeline(cfg);
    std::fprintf(stderr,
                 "run: lines=%llu skipped=%llu matched=%llu sampled=%llu "
                 "tagged=%llu pos=%llu neg=%llu neutral=%llu -> %s\n",
                 static_cast<unsigned long long>(s.tally.lines),
                 static_cast<unsigned long long>(s.tally.skipped),
                 static_cast<unsigned long long>(s.matched_keywords),
                 static_cast<unsigned long long>(s.sampled),
                 static_cast<unsigned long long>(s.tagged),
                 static_cast<unsigned long long>(s.n_pos),
                 static_cast<unsigned long long>(s.n_neg),
                 static_cast<unsigned long long>(s.n_neutral),
                 cfg.output_dir.c_str());
    return 0;
  }
  if (subcommand == "correlate") {
    const auto s = covtrends::run_correlate(cfg);
    std::fprintf(stderr, "correlate: series=%zu computable=%zu -> %s\n", s.series,
                 s.computable, s.out_path.c_str());
    return 0;
  }
  std::fprintf(stderr, "unknown subcommand: %s\n", subcommand.c_str());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"country tagging, sentiment trends and case-count correlation "
               "for short-text streams"};
  app.set_version_flag("--version", "covtrends 0.1.0");
  app.require_subcommand(1);

  static const char* kSubcommands[] = {"build-lexicon", "train", "tag",
                                       "score", "run", "correlate"};
  static const char* kDescriptions[] = {
      "build the place-name lexicon TSV from GeoNames dumps",
      "train the sentiment model and write the loss trace",
      "tag tweets with the countries they mention",
      "score tweet sentiment with a trained model",
      "run the full weekly pipeline and emit reports",
      "recompute lag correlations from a previous run's outputs"};

  FlagValues flags[std::size(kSubcommands)];
  CLI::App* cmds[std::size(kSubcommands)];
  for (std::size_t i = 0; i < std::size(kSubcommands); ++i) {
    cmds[i] = app.add_subcommand(kSubcommands[i], kDescriptions[i]);
    add_common_options(cmds[i], &flags[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < std::size(kSubcommands); ++i) {
    if (!cmds[i]->parsed()) continue;
    try {
      return dispatch(kSubcommands[i], resolve_config(*cmds[i], flags[i]));
    } catch (const covtrends::IoError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 1;
    } catch (const covtrends::Error& e) {  // format + argument errors
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "unexpected error: %s\n", e.what());
      return 1;
    }
  }
  return 2;
}
