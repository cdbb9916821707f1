// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "covtrends/encoder.hpp"
#include "covtrends/normalize.hpp"
#include "covtrends/rng.hpp"
#include "test_util.hpp"

namespace covtrends::testing {

using covtrends::Date;
using covtrends::SentimentLabel;

const char* const kMarkerNegative = "grimdole";
const char* const kMarkerNeutral = "flatmid";
const char* const kMarkerPositive = "gleamjoy";

const char* marker_for(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Negative: return kMarkerNegative;
    case SentimentLabel::Neutral: return kMarkerNeutral;
    case SentimentLabel::Positive: return kMarkerPositive;
  }
  return kMarkerNeutral;
}

void write_small_geonames(const std::string& dir) {
  write_file(dir + "/countryInfo.txt",
             "# fixture country info\n"
             "CA\tCAN\t124\tCN\tCanada\tOttawa\n"
             "FR\tFRA\t250\tFR\tFrance\tParis\n"
             "US\tUSA\t840\tUS\tUnited States\tWashington\n"
             "GB\tGBR\t826\tUK\tUnited Kingdom\tLondon\n"
             "DE\tDEU\t276\tGM\tGermany\tBerlin\n");
  write_file(dir + "/admin1CodesASCII.txt",
             "CA.08\tOntario\tOntario\t6093943\n"
             "US.NY\tNew York\tNew York\t5128638\n"
             "FR.11\t\xC3\x8Ele-de-France\tIle-de-France\t3012874\n"
             "DE.02\tBayern\tBavaria\t2951839\n"
             "GB.ENG\tEngland\tEngland\t6269131\n");
  write_file(
      dir + "/cities15000.txt",
      "6167865\tToronto\tToronto\tYTO\t43.70\t-79.42\tP\tPPL\tCA\n"
      "2988507\tParis\tParis\tPRS\t48.85\t2.35\tP\tPPLC\tFR\n"
      "4717560\tParis\tParis\t\t33.66\t-95.55\tP\tPPL\tUS\n"
      "5128581\tNew York\tNew York City\tNYC\t40.71\t-74.00\tP\tPPL\tUS\n"
      "2633352\tYork\tYork\t\t53.95\t-1.08\tP\tPPL\tGB\n"
      "2867714\tM\xC3\xBCnchen\tMunich\t\t48.13\t11.58\tP\tPPL\tDE\n"
      "2950159\tBerlin\tBerlin\t\t52.52\t13.40\tP\tPPL\tDE\n"
      "9000001\tCali\tCali\t\t34.00\t-96.00\tP\tPPL\tUS\n"
      "2990440\tNice\tNice\t\t43.70\t7.27\tP\tPPL\tFR\n"
      "4076598\tMobile\tMobile\t\t30.69\t-88.04\tP\tPPL\tUS\n"
      "1278987\tAlong\tAlong\t\t28.17\t94.80\tP\tPPL\tIN\n");
}

namespace {

// GeoNames-style proper names for the 32 default countries.
const std::map<std::string, std::string>& geonames_country_names() {
  static const std::map<std::string, std::string> kNames = {
      {"AE", "United Arab Emirates"}, {"AU", "Australia"},
      {"BE", "Belgium"},              {"BR", "Brazil"},
      {"CA", "Canada"},               {"CH", "Switzerland"},
      {"CL", "Chile"},                {"CN", "China"},
      {"DE", "Germany"},              {"EC", "Ecuador"},
      {"ES", "Spain"},                {"FR", "France"},
      {"GB", "United Kingdom"},       {"IE", "Ireland"},
      {"IN", "India"},                {"IR", "Iran"},
      {"IT", "Italy"},                {"JP", "Japan"},
      {"KR", "South Korea"},          {"MX", "Mexico"},
      {"NL", "Netherlands"},          {"NZ", "New Zealand"},
      {"PE", "Peru"},                 {"PK", "Pakistan"},
      {"PT", "Portugal"},             {"QA", "Qatar"},
      {"RU", "Russia"},               {"SA", "Saudi Arabia"},
      {"SE", "Sweden"},               {"SG", "Singapore"},
      {"TR", "Turkey"},               {"US", "United States"},
  };
  return kNames;
}

const std::vector<std::string>& forbidden_tokens() {
  static const std::vector<std::string> kForbidden = {
      "corona", "coronavirus", "pandemic", "sarscov2", "covid", "covid19",
      kMarkerNegative, kMarkerNeutral, kMarkerPositive,
      // corpus filler words
      "people", "staying", "home", "tonight", "thinking", "news", "update",
      "latest", "report", "today", "week", "lockdown", "masks", "numbers",
  };
  return kForbidden;
}

class NameForge {
 public:
  explicit NameForge(std::uint64_t seed) : rng_(seed) {
    for (const auto& t : forbidden_tokens()) used_.insert(t);
  }

  // Fresh unique lowercase token, free of keyword/marker substrings.
  std::string fresh_token() {
    static const char* kSyllables[] = {
        "ba", "do", "fa", "gu", "ka", "le", "mi", "no", "pa", "re",
        "sa", "tu", "va", "wo", "ya", "zo", "bri", "dan", "fer", "gol",
        "hul", "jin", "lam", "mer", "nil", "pol", "gan", "ril", "sun", "tor",
        "vel", "win", "zan", "che", "dra", "fle", "gri", "pla", "sto", "tren"};
    for (;;) {
      const std::size_t syllables = 3 + rng_.below(2);  // 3 or 4
      std::string name;
      for (std::size_t i = 0; i < syllables; ++i)
        name += kSyllables[rng_.below(std::size(kSyllables))];
      bool clean = true;
      for (const auto& bad : forbidden_tokens())
        if (name.find(bad) != std::string::npos) clean = false;
      if (clean && used_.insert(name).second) return name;
    }
  }

  std::uint64_t below(std::uint64_t bound) { return rng_.below(bound); }

 private:
  covtrends::SplitMix64 rng_;
  std::set<std::string> used_;
};

std::string title_case(std::string token) {
  if (!token.empty() && token[0] >= 'a' && token[0] <= 'z')
    token[0] = static_cast<char>(token[0] - 'a' + 'A');
  return token;
}

// Accent the first 'a'/'e'/'o' so the name column differs from the
// asciiname column while folding back to the same surface.
std::string accent_first_vowel(const std::string& token) {
  std::string out;
  bool done = false;
  for (char c : token) {
    if (!done && c == 'a') { out += "\xC3\xA1"; done = true; continue; }
    if (!done && c == 'e') { out += "\xC3\xA9"; done = true; continue; }
    if (!done && c == 'o') { out += "\xC3\xB6"; done = true; continue; }
    out.push_back(c);
  }
  return done ? out : token;
}

}  // namespace

GeoFixture write_fullscale_geonames(const std::string& dir, std::uint64_t seed) {
  GeoFixture fixture;
  std::ostringstream country_info, admin1, cities;
  country_info << "# synthetic country info\n";

  const auto codes = covtrends::default_country_codes();
  long geoname_id = 3000000;
  NameForge forge(covtrends::mix64(seed ^ 0x67656F6EULL));

  for (std::size_t ci = 0; ci < codes.size(); ++ci) {
    const std::string& iso = codes[ci];
    const std::string& country_name = geonames_country_names().at(iso);
    country_info << iso << "\tXXX\t" << 100 + ci << "\tXX\t" << country_name
                 << "\tCapital\n";
    fixture.country_names[iso] = covtrends::normalize_surface(country_name);
    ++fixture.surface_count;

    const std::size_t n_admin = 10 + forge.below(8);
    for (std::size_t a = 0; a < n_admin; ++a) {
      const std::string token = forge.fresh_token();
      const std::string display = title_case(token);
      admin1 << iso << '.' << (a < 9 ? "0" : "") << a + 1 << '\t' << display
             << '\t' << display << '\t' << ++geoname_id << '\n';
      fixture.admin1[iso].push_back(token);
      ++fixture.surface_count;
    }

    const std::size_t n_cities = 220 + forge.below(60);
    for (std::size_t c = 0; c < n_cities; ++c) {
      std::string surface, name_col, ascii_col;
      const std::uint64_t style = forge.below(30);
      if (style == 0) {
        // Multi-word name, both tokens fresh so nothing else matches.
        const std::string token = forge.fresh_token();
        static const char* kPrefixes[] = {"San", "Port", "Lake", "Nova"};
        const std::string prefix = kPrefixes[forge.below(std::size(kPrefixes))];
        name_col = prefix + " " + title_case(token);
        ascii_col = name_col;
        surface = covtrends::normalize_surface(name_col);
      } else if (style == 1) {
        const std::string token = forge.fresh_token();
        name_col = title_case(accent_first_vowel(token));
        ascii_col = title_case(token);
        surface = token;
      } else {
        const std::string token = forge.fresh_token();
        name_col = title_case(token);
        ascii_col = name_col;
        surface = token;
      }
      cities << ++geoname_id << '\t' << name_col << '\t' << ascii_col << "\t\t"
             << "10.0\t20.0\tP\tPPL\t" << iso << "\t\t01\t\t\t\t"
             << 15000 + forge.below(2000000) << "\t\t100\tEtc/UTC\t2024-01-01\n";
      fixture.cities[iso].push_back(surface);
      ++fixture.surface_count;
    }
  }

  write_file(dir + "/countryInfo.txt", country_info.str());
  write_file(dir + "/admin1CodesASCII.txt", admin1.str());
  write_file(dir + "/cities15000.txt", cities.str());
  return fixture;
}

covtrends::SentimentModel make_marker_model(std::size_t table_size) {
  constexpr std::size_t kDim = 4;
  auto encoder = std::make_shared<covtrends::HashedEmbeddingEncoder>(
      kDim, table_size, /*seed=*/0);
  std::fill(encoder->table().begin(), encoder->table().end(), 0.0);

  auto plant = [&](const char* marker, std::size_t klass) {
    const std::size_t row = covtrends::fnv1a64(marker) % table_size;
    double* base = encoder->table().data() + row * kDim;
    base[klass] = 10.0;
    base[3] = 5.0;  // attention hook
  };
  plant(kMarkerNegative, 0);
  plant(kMarkerNeutral, 1);
  plant(kMarkerPositive, 2);

  covtrends::SentimentModel model;
  model.encoder = encoder;
  model.att.w_att = {0.0, 0.0, 0.0, 20.0};
  for (std::size_t i = 0; i < model.heads.size(); ++i) {
    covtrends::ClassifierHead& head = model.heads[i];
    head.trained_on = i == 0 ? "sst" : i == 1 ? "semeval15-t10" : "semeval15-t11";
    head.weights.assign(3 * kDim, 0.0);
    head.weights[0 * kDim + 0] = 1.0;  // Negative reads coordinate 0
    head.weights[1 * kDim + 1] = 1.0;  // Neutral reads coordinate 1
    head.weights[2 * kDim + 2] = 1.0;  // Positive reads coordinate 2
    head.bias.fill(0.0);
  }
  return model;
}

std::vector<covtrends::LabeledExample> toy_training_set() {
  static const char* kFillers[] = {"rainy", "quiet", "busy", "long", "cold",
                                   "warm", "gray"};
  std::vector<covtrends::LabeledExample> examples;
  const std::array<SentimentLabel, 3> labels = {
      SentimentLabel::Negative, SentimentLabel::Neutral, SentimentLabel::Positive};
  for (SentimentLabel label : labels) {
    for (std::size_t i = 0; i < 7; ++i) {
      std::ostringstream text;
      text << marker_for(label) << ' ' << kFillers[i] << " day";
      examples.push_back(covtrends::LabeledExample{text.str(), label, "toy"});
    }
  }
  return examples;
}

std::string toy_training_tsv() {
  std::ostringstream out;
  for (const auto& ex : toy_training_set()) {
    const char* sst_label = ex.label == SentimentLabel::Negative ? "0"
                            : ex.label == SentimentLabel::Neutral ? "2"
                                                                  : "4";
    out << "sst\t" << sst_label << '\t' << ex.text << '\n';
  }
  return out.str();
}

std::vector<std::pair<std::string, std::string>> place_pool(const GeoFixture& geo,
                                                            std::size_t per_country) {
  std::vector<std::pair<std::string, std::string>> pool;
  for (const auto& [iso, surfaces] : geo.cities) {
    for (std::size_t i = 0; i < surfaces.size() && i < per_country; ++i) {
      // Re-title-case each word for a display form.
      std::string display;
      bool start = true;
      for (char c : surfaces[i]) {
        if (start && c >= 'a' && c <= 'z') {
          display.push_back(static_cast<char>(c - 'a' + 'A'));
          start = false;
        } else {
          display.push_back(c);
          start = c == ' ';
        }
      }
      pool.emplace_back(iso, display);
    }
  }
  return pool;
}

TweetCorpus make_planted_corpus(
    std::size_t n, std::uint64_t seed, const std::vector<Date>& tuesdays,
    const std::vector<std::pair<std::string, std::string>>& places,
    double malformed_fraction) {
  if (tuesdays.empty() || places.empty())
    throw std::runtime_error("make_planted_corpus: need tuesdays and places");

  static const char* kFillers[] = {"people", "staying", "home", "tonight",
                                   "thinking", "news", "update", "latest",
                                   "report", "today"};
  static const char* kKeywordForms[] = {"covid",    "COVID",     "Corona",
                                        "COVID19",  "pandemic",  "SARSCoV2",
                                        "coronavirus"};

  covtrends::SplitMix64 rng(covtrends::mix64(seed ^ 0x74776565ULL));
  TweetCorpus corpus;
  std::ostringstream out;

  const auto malformed_every =
      malformed_fraction > 0.0
          ? static_cast<std::size_t>(1.0 / malformed_fraction)
          : n + 1;

  for (std::size_t i = 0; i < n; ++i) {
    PlantedTweet t;
    t.id = "t" + std::to_string(i);

    // Date: mostly grid Tuesdays, some weekday strays, some out of range.
    const std::uint64_t date_kind = rng.below(100);
    if (date_kind < 80) {
      t.date = tuesdays[rng.below(tuesdays.size())];
      t.on_tuesday_grid = true;
    } else if (date_kind < 92) {
      const Date base = tuesdays[rng.below(tuesdays.size())];
      t.date = covtrends::add_days(base, 1 + static_cast<int>(rng.below(6)));
      t.on_tuesday_grid = false;
    } else {
      t.date = covtrends::add_days(tuesdays.front(), -14 - static_cast<int>(rng.below(30)));
      t.on_tuesday_grid = false;
    }

    t.has_keyword = rng.below(100) < 85;
    t.label = static_cast<SentimentLabel>(rng.below(3));

    const std::uint64_t n_places = rng.below(4);  // 0..3
    std::set<std::string> country_set;
    std::vector<std::string> place_displays;
    for (std::uint64_t p = 0; p < n_places; ++p) {
      const auto& [iso, display] = places[rng.below(places.size())];
      country_set.insert(iso);
      // Vary the casing/sigil of single-word names.
      const std::uint64_t style = rng.below(4);
      if (style == 0 && display.find(' ') == std::string::npos) {
        place_displays.push_back("#" + display);
      } else if (style == 1 && display.find(' ') == std::string::npos) {
        std::string upper = display;
        for (char& c : upper)
          if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        place_displays.push_back(upper);
      } else {
        place_displays.push_back(display);
      }
    }
    t.countries.assign(country_set.begin(), country_set.end());

    std::ostringstream text;
    text << kFillers[rng.below(std::size(kFillers))];
    if (t.has_keyword) text << ' ' << kKeywordForms[rng.below(std::size(kKeywordForms))];
    for (const auto& display : place_displays) text << ' ' << display;
    text << ' ' << marker_for(t.label);
    text << ' ' << kFillers[rng.below(std::size(kFillers))];
    t.text = text.str();

    t.malformed = malformed_fraction > 0.0 && i % malformed_every == malformed_every - 1;
    if (t.malformed) {
      out << "{\"id\": \"" << t.id << "\", \"created_at\": \"broken\n";
    } else {
      nlohmann::json doc;
      doc["id"] = t.id;
      doc["created_at"] = covtrends::format_iso_date(t.date) + "T12:00:00Z";
      doc["text"] = t.text;
      doc["lang"] = "en";  // unknown fields must be ignored
      out << doc.dump() << '\n';
    }
    corpus.tweets.push_back(std::move(t));
  }
  corpus.jsonl = out.str();
  return corpus;
}

std::string make_cases_csv(const std::vector<covtrends::CountryInfo>& countries,
                           const Date& first_day, const Date& last_day,
                           std::uint64_t seed) {
  const std::int64_t first = covtrends::days_from_civil(first_day);
  const std::int64_t last = covtrends::days_from_civil(last_day);
  if (last < first) throw std::runtime_error("make_cases_csv: bad range");
  const auto n_days = static_cast<std::size_t>(last - first + 1);

  std::ostringstream out;
  out << "Province/State,Country/Region,Lat,Long";
  for (std::size_t d = 0; d < n_days; ++d) {
    const Date date = covtrends::civil_from_days(first + static_cast<std::int64_t>(d));
    out << ',' << date.month << '/' << date.day << '/' << date.year % 100;
  }
  out << '\n';

  covtrends::SplitMix64 rng(covtrends::mix64(seed ^ 0x63617365ULL));
  for (const auto& info : countries) {
    // A couple of countries get split across province rows.
    const std::size_t n_rows = info.iso_code == "CA" || info.iso_code == "AU" ? 3 : 1;
    for (std::size_t r = 0; r < n_rows; ++r) {
      const std::string quoted_country =
          info.case_name.find(',') != std::string::npos
              ? "\"" + info.case_name + "\""
              : info.case_name;
      out << (n_rows > 1 ? "Province " + std::to_string(r + 1) : "") << ','
          << quoted_country << ",0.0,0.0";
      std::int64_t cumulative = 0;
      for (std::size_t d = 0; d < n_days; ++d) {
        cumulative += static_cast<std::int64_t>(rng.below(400));
        out << ',' << cumulative;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace covtrends::testing
