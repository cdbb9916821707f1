// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covtrends {

// In weekly buckets and reports, the pseudo country code for the
// whole-corpus series.
inline constexpr const char* kGlobalCode = "GLOBAL";

struct CountryInfo {
  std::string iso_code;   // ISO-3166 alpha-2
  std::string name;       // display name
  std::string case_name;  // row name used by the wide case-count CSVs
};

// The 32 countries the default pipeline configuration targets.
const std::vector<CountryInfo>& default_countries();

std::vector<std::string> default_country_codes();

// Lookup in the built-in table; nullopt for codes outside it.
std::optional<CountryInfo> country_by_code(std::string_view iso_code);

}  // namespace covtrends
