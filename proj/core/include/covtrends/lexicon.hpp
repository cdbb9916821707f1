// SPDX-License-Identifier: Apache-2.0
//
// Country-attributed place-name lexicon built from GeoNames dump files
// (country info, admin1 names, cities). Surfaces are normalized with
// normalize_text rules; a blocklist plus a minimum-length rule keep
// common English words out.

#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace covtrends {

enum class EntryKind : int {
  Country = 0,
  Admin1 = 1,
  City = 2,
};

std::string_view to_string(EntryKind kind);

struct LocationEntry {
  std::string surface;  // normalized
  std::string country;  // ISO-3166 alpha-2
  EntryKind kind = EntryKind::City;

  auto operator<=>(const LocationEntry&) const = default;
};

struct Lexicon {
  std::vector<LocationEntry> entries;  // sorted, unique
  std::vector<std::string> countries;  // configured ISO codes

  std::size_t count_of(EntryKind kind) const;
};

struct GeonamesSources {
  std::string country_info;  // countryInfo.txt layout
  std::string admin1;        // admin1CodesASCII.txt layout
  std::string cities;        // cities15000.txt layout
};

// The conventional dump filenames inside `dir`.
GeonamesSources geonames_sources_in_dir(const std::string& dir);

// One entry per country/admin1/city name of a configured country,
// normalized; surfaces that are blocklisted or shorter than 3 bytes
// are dropped. Throws FormatError naming file and line on bad input.
Lexicon build_lexicon(const GeonamesSources& sources,
                      const std::vector<std::string>& countries,
                      const std::set<std::string>& blocklist);

// Newline-delimited lowercase words; blank lines and '#' comments are
// skipped, entries are normalized.
std::set<std::string> load_blocklist(std::istream& in);
std::set<std::string> load_blocklist_file(const std::string& path);

// Sorted TSV with a format-version comment; byte-identical for
// identical inputs.
void save_lexicon_tsv(const Lexicon& lex, std::ostream& out);
void save_lexicon_tsv_file(const Lexicon& lex, const std::string& path);
Lexicon load_lexicon_tsv(std::istream& in);
Lexicon load_lexicon_tsv_file(const std::string& path);

}  // namespace covtrends
