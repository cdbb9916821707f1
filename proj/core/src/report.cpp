// SPDX-License-Identifier: Apache-2.0

#include "covtrends/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "covtrends/countries.hpp"
#include "covtrends/csv.hpp"
#include "covtrends/errors.hpp"

namespace covtrends {

namespace {

std::string format_r(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", r);
  return buf;
}

void write_series_csv(const std::string& path, const std::string& country,
                      const std::map<std::pair<std::string, Date>, const WeeklyBucket*>& index,
                      const ReportInputs& in) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report file: " + path);
  write_csv_row(out, {"week", "n_total", "n_pos", "n_neg", "n_neutral",
                      "weekly_cases"});
  const auto cases_it = in.cases.find(country);
  for (std::size_t w = 0; w < in.weeks.size(); ++w) {
    const auto it = index.find({country, in.weeks[w]});
    const WeeklyBucket* b = it == index.end() ? nullptr : it->second;
    std::string cases_cell;
    if (cases_it != in.cases.end() && w < cases_it->second.size())
      cases_cell = std::to_string(cases_it->second[w]);
    write_csv_row(out, {format_iso_date(in.weeks[w]),
                        std::to_string(b ? b->n_total : 0),
                        std::to_string(b ? b->n_pos : 0),
                        std::to_string(b ? b->n_neg : 0),
                        std::to_string(b ? b->n_neutral : 0), cases_cell});
  }
  out.flush();
  if (!out) throw IoError("failed writing report file: " + path);
}

}  // namespace

std::vector<std::string> emit_report(const ReportInputs& in,
                                     const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir);

  std::map<std::pair<std::string, Date>, const WeeklyBucket*> index;
  for (const WeeklyBucket& b : in.buckets) index[{b.country, b.week}] = &b;

  std::vector<std::string> written;
  std::vector<std::string> countries = in.countries;
  std::sort(countries.begin(), countries.end());

  for (const auto& country : countries) {
    const std::string path = out_dir + "/country_" + country + ".csv";
    write_series_csv(path, country, index, in);
    written.push_back(path);
  }
  {
    const std::string path = out_dir + "/global.csv";
    write_series_csv(path, kGlobalCode, index, in);
    written.push_back(path);
  }

  {
    const std::string path = out_dir + "/correlations.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write report file: " + path);
    write_csv_row(out, {"country", "lag", "r", "n", "best_lag"});
    std::vector<CountryCorrelation> sorted = in.correlations;
    std::sort(sorted.begin(), sorted.end(),
              [](const CountryCorrelation& a, const CountryCorrelation& b) {
                return a.country < b.country;
              });
    for (const auto& cc : sorted) {
      if (!cc.report) {
        write_csv_row(out, {cc.country, "", "NOT-COMPUTABLE", "", ""});
        continue;
      }
      for (const LagCorrelation& lc : cc.report->lags) {
        write_csv_row(out, {cc.country, std::to_string(lc.lag), format_r(lc.r),
                            std::to_string(lc.n),
                            lc.lag == cc.report->best_lag ? "1" : "0"});
      }
    }
    out.flush();
    if (!out) throw IoError("failed writing report file: " + path);
    written.push_back(path);
  }
  return written;
}

}  // namespace covtrends
