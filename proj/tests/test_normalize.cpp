// SPDX-License-Identifier: Apache-2.0

#include "covtrends/normalize.hpp"

#include <doctest.h>

namespace {

using covtrends::normalize_surface;
using covtrends::normalize_text;

TEST_CASE("folding rules") {
  CHECK(normalize_surface("S\xC3\xA3o Paulo") == "sao paulo");
  CHECK(normalize_surface("#Toronto") == "toronto");
  CHECK(normalize_surface("NEW   YORK") == "new york");
  CHECK(normalize_surface("M\xC3\xBCnchen") == "munchen");
  CHECK(normalize_surface("\xC3\x8Ele-de-France") == "ile-de-france");
  CHECK(normalize_surface("Stra\xC3\x9F""e") == "strasse");
  CHECK(normalize_surface("@user says hi") == "user says hi");
  CHECK(normalize_surface("  padded\t\ttext  ") == "padded text");
  CHECK(normalize_surface("Qu\xC3\xA9""bec") == "quebec");
  CHECK(normalize_surface("\xC5\x81\xC3\xB3""d\xC5\xBA") == "lodz");
}

TEST_CASE("non-Latin text passes through") {
  const std::string tokyo = "\xE6\x9D\xB1\xE4\xBA\xAC";  // CJK, no fold
  CHECK(normalize_surface(tokyo) == tokyo);
}

TEST_CASE("empty and degenerate inputs") {
  CHECK(normalize_surface("").empty());
  CHECK(normalize_surface("   ").empty());
  CHECK(normalize_surface("###").empty());
}

TEST_CASE("offset map recovers original spans") {
  //           0123456789012345
  const std::string original = "Go  #Toronto NOW";
  const auto norm = normalize_text(original);
  CHECK(norm.text == "go toronto now");

  // "toronto" occupies [3, 10) in the normalized text.
  const auto [begin, end] = norm.source_span(3, 10);
  CHECK(original.substr(begin, end - begin) == "Toronto");

  // "now" is [11, 14) normalized -> "NOW" in the original.
  const auto [nb, ne] = norm.source_span(11, 14);
  CHECK(original.substr(nb, ne - nb) == "NOW");
}

TEST_CASE("offset map through multi-byte folds") {
  const std::string original = "in S\xC3\xA3o Paulo";
  const auto norm = normalize_text(original);
  CHECK(norm.text == "in sao paulo");
  const auto [begin, end] = norm.source_span(3, 12);
  CHECK(original.substr(begin, end - begin) == "S\xC3\xA3o Paulo");
}

TEST_CASE("invalid utf-8 bytes do not derail normalization") {
  std::string junk = "ok ";
  junk.push_back(static_cast<char>(0xFF));
  junk += " fine";
  const auto norm = normalize_text(junk);
  CHECK(norm.text.find("ok") != std::string::npos);
  CHECK(norm.text.find("fine") != std::string::npos);
  CHECK(norm.src_begin.size() == norm.text.size());
}

TEST_CASE("word byte classification") {
  CHECK(covtrends::is_word_byte('a'));
  CHECK(covtrends::is_word_byte('Z'));
  CHECK(covtrends::is_word_byte('0'));
  CHECK(covtrends::is_word_byte(0xC3));
  CHECK_FALSE(covtrends::is_word_byte(' '));
  CHECK_FALSE(covtrends::is_word_byte('-'));
  CHECK_FALSE(covtrends::is_word_byte('#'));
}

}  // namespace
