// SPDX-License-Identifier: Apache-2.0

#include "covtrends/countries.hpp"

namespace covtrends {

const std::vector<CountryInfo>& default_countries() {
  static const std::vector<CountryInfo> kTable = {
      {"AE", "UAE", "United Arab Emirates"},
      {"AU", "Australia", "Australia"},
      {"BE", "Belgium", "Belgium"},
      {"BR", "Brazil", "Brazil"},
      {"CA", "Canada", "Canada"},
      {"CH", "Switzerland", "Switzerland"},
      {"CL", "Chile", "Chile"},
      {"CN", "China", "China"},
      {"DE", "Germany", "Germany"},
      {"EC", "Ecuador", "Ecuador"},
      {"ES", "Spain", "Spain"},
      {"FR", "France", "France"},
      {"GB", "UK", "United Kingdom"},
      {"IE", "Ireland", "Ireland"},
      {"IN", "India", "India"},
      {"IR", "Iran", "Iran"},
      {"IT", "Italy", "Italy"},
      {"JP", "Japan", "Japan"},
      {"KR", "South Korea", "Korea, South"},
      {"MX", "Mexico", "Mexico"},
      {"NL", "Netherlands", "Netherlands"},
      {"NZ", "New Zealand", "New Zealand"},
      {"PE", "Peru", "Peru"},
      {"PK", "Pakistan", "Pakistan"},
      {"PT", "Portugal", "Portugal"},
      {"QA", "Qatar", "Qatar"},
      {"RU", "Russia", "Russia"},
      {"SA", "Saudi Arabia", "Saudi Arabia"},
      {"SE", "Sweden", "Sweden"},
      {"SG", "Singapore", "Singapore"},
      {"TR", "Turkey", "Turkey"},
      {"US", "USA", "US"},
  };
  return kTable;
}

std::vector<std::string> default_country_codes() {
  std::vector<std::string> codes;
  codes.reserve(default_countries().size());
  for (const auto& c : default_countries()) codes.push_back(c.iso_code);
  return codes;
}

std::optional<CountryInfo> country_by_code(std::string_view iso_code) {
  for (const auto& c : default_countries())
    if (c.iso_code == iso_code) return c;
  return std::nullopt;
}

}  // namespace covtrends
