// SPDX-License-Identifier: Apache-2.0

#include "covtrends/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "covtrends/errors.hpp"
#include "covtrends/normalize.hpp"

namespace covtrends {

namespace {

constexpr std::string_view kFormatComment = "# covtrends lexicon format v1";

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(pos));
      return fields;
    }
    fields.emplace_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

class TabFile {
 public:
  TabFile(const std::string& path, std::string_view role) : path_(path) {
    in_.open(path, std::ios::binary);
    if (!in_)
      throw FormatError(std::string(role) + " source missing or unreadable: " + path);
  }

  // Next non-blank, non-comment line split on tabs; false at EOF.
  bool next(std::vector<std::string>* fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      *fields = split_tabs(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(path_ + ":" + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

bool is_iso_code(std::string_view s) {
  return s.size() == 2 && s[0] >= 'A' && s[0] <= 'Z' && s[1] >= 'A' && s[1] <= 'Z';
}

}  // namespace

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Country: return "country";
    case EntryKind::Admin1: return "admin1";
    case EntryKind::City: return "city";
  }
  return "city";
}

std::size_t Lexicon::count_of(EntryKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [kind](const LocationEntry& e) { return e.kind == kind; }));
}

GeonamesSources geonames_sources_in_dir(const std::string& dir) {
  return GeonamesSources{dir + "/countryInfo.txt", dir + "/admin1CodesASCII.txt",
                         dir + "/cities15000.txt"};
}

Lexicon build_lexicon(const GeonamesSources& sources,
                      const std::vector<std::string>& countries,
                      const std::set<std::string>& blocklist) {
  const std::set<std::string> wanted(countries.begin(), countries.end());
  std::set<LocationEntry> entries;

  auto add = [&](std::string_view raw_surface, const std::string& country,
                 EntryKind kind) {
    std::string surface = normalize_surface(raw_surface);
    if (surface.size() < 3) return;
    if (blocklist.contains(surface)) return;
    entries.insert(LocationEntry{std::move(surface), country, kind});
  };

  {
    TabFile file(sources.country_info, "country info");
    std::vector<std::string> f;
    while (file.next(&f)) {
      if (f.size() < 2) file.fail("expected at least 2 tab-separated columns");
      const std::string& iso = f[0];
      if (!is_iso_code(iso)) file.fail("invalid ISO code '" + iso + "'");
      if (!wanted.contains(iso)) continue;
      // Official dumps carry the name in column 5; trimmed fixtures in
      // column 2.
      const std::string& name = f.size() >= 5 ? f[4] : f[1];
      add(name, iso, EntryKind::Country);
    }
  }

  {
    TabFile file(sources.admin1, "admin1");
    std::vector<std::string> f;
    while (file.next(&f)) {
      if (f.size() < 2) file.fail("expected at least 2 tab-separated columns");
      const std::string& code = f[0];
      if (code.size() < 4 || code[2] != '.' || !is_iso_code(code.substr(0, 2)))
        file.fail("invalid admin1 code '" + code + "'");
      const std::string iso = code.substr(0, 2);
      if (!wanted.contains(iso)) continue;
      add(f[1], iso, EntryKind::Admin1);
      if (f.size() >= 3 && !f[2].empty()) add(f[2], iso, EntryKind::Admin1);
    }
  }

  {
    TabFile file(sources.cities, "cities");
    std::vector<std::string> f;
    while (file.next(&f)) {
      if (f.size() < 9) file.fail("expected at least 9 tab-separated columns");
      const std::string& iso = f[8];
      if (!is_iso_code(iso)) file.fail("invalid country code '" + iso + "'");
      if (!wanted.contains(iso)) continue;
      add(f[1], iso, EntryKind::City);
      if (!f[2].empty()) add(f[2], iso, EntryKind::City);
    }
  }

  Lexicon lex;
  lex.entries.assign(entries.begin(), entries.end());
  lex.countries = countries;
  return lex;
}

std::set<std::string> load_blocklist(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string word = normalize_surface(line);
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

std::set<std::string> load_blocklist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("blocklist missing or unreadable: " + path);
  return load_blocklist(in);
}

void save_lexicon_tsv(const Lexicon& lex, std::ostream& out) {
  out << kFormatComment << '\n';
  out << "surface\tcountry\tkind\n";
  for (const auto& e : lex.entries)
    out << e.surface << '\t' << e.country << '\t' << to_string(e.kind) << '\n';
}

void save_lexicon_tsv_file(const Lexicon& lex, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write lexicon: " + path);
  save_lexicon_tsv(lex, out);
  out.flush();
  if (!out) throw IoError("failed writing lexicon: " + path);
}

Lexicon load_lexicon_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kFormatComment)
    throw FormatError("lexicon TSV: missing format comment '" +
                      std::string(kFormatComment) + "'");
  if (!std::getline(in, line) || line != "surface\tcountry\tkind")
    throw FormatError("lexicon TSV: bad header line");

  Lexicon lex;
  std::set<std::string> countries;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_tabs(line);
    if (f.size() != 3)
      throw FormatError("lexicon TSV line " + std::to_string(line_no) +
                        ": expected 3 columns");
    EntryKind kind;
    if (f[2] == "country") kind = EntryKind::Country;
    else if (f[2] == "admin1") kind = EntryKind::Admin1;
    else if (f[2] == "city") kind = EntryKind::City;
    else
      throw FormatError("lexicon TSV line " + std::to_string(line_no) +
                        ": unknown kind '" + f[2] + "'");
    if (f[0].empty() || !is_iso_code(f[1]))
      throw FormatError("lexicon TSV line " + std::to_string(line_no) +
                        ": bad surface or country");
    countries.insert(f[1]);
    lex.entries.push_back(LocationEntry{f[0], f[1], kind});
  }
  std::sort(lex.entries.begin(), lex.entries.end());
  lex.entries.erase(std::unique(lex.entries.begin(), lex.entries.end()),
                    lex.entries.end());
  lex.countries.assign(countries.begin(), countries.end());
  return lex;
}

Lexicon load_lexicon_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("lexicon missing or unreadable: " + path);
  return load_lexicon_tsv(in);
}

}  // namespace covtrends
