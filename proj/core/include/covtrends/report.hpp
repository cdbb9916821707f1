// SPDX-License-Identifier: Apache-2.0
//
// Plot-ready CSV outputs: one file per country, one global file, one
// correlation file. Deterministic row and column order; RFC-4180
// quoting; ISO-8601 dates.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covtrends/trends.hpp"

namespace covtrends {

// A country whose lag sweep had no computable correlation carries
// nullopt and is written as a NOT-COMPUTABLE row.
struct CountryCorrelation {
  std::string country;
  std::optional<CorrelationReport> report;
};

struct ReportInputs {
  std::vector<WeeklyBucket> buckets;  // from aggregate_weekly
  std::vector<Date> weeks;
  std::vector<std::string> countries;
  // country (ISO code or GLOBAL) -> weekly case sums aligned to weeks;
  // countries without a series get blank cells.
  std::map<std::string, std::vector<std::int64_t>> cases;
  std::vector<CountryCorrelation> correlations;
};

// Writes country_<ISO>.csv per country, global.csv, correlations.csv
// into `out_dir` (created if missing). Returns the paths written.
// Byte-identical across runs on identical inputs.
std::vector<std::string> emit_report(const ReportInputs& inputs,
                                     const std::string& out_dir);

}  // namespace covtrends
