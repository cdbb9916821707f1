// SPDX-License-Identifier: Apache-2.0
//
// Text normalization shared by the lexicon and the matcher. Rules:
// case-fold, strip Latin diacritics to ASCII where a fold exists,
// drop '#'/'@' sigils, collapse whitespace runs to single spaces and
// trim. An offset map recovers original byte spans from spans into
// the normalized text.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covtrends {

struct NormalizedText {
  std::string text;
  // Per normalized byte: [begin, end) byte range of the source
  // character it came from. A collapsed space covers its whole run.
  std::vector<std::uint32_t> src_begin;
  std::vector<std::uint32_t> src_end;

  // Original byte span for normalized span [start, end), end > start.
  std::pair<std::uint32_t, std::uint32_t> source_span(std::size_t start,
                                                      std::size_t end) const {
    return {src_begin[start], src_end[end - 1]};
  }
};

NormalizedText normalize_text(std::string_view text);

// Normalized text only, for lexicon surfaces.
std::string normalize_surface(std::string_view text);

// Token-boundary classification on normalized bytes: ASCII
// alphanumerics are word bytes, and so is any byte >= 0x80 (never
// match inside a multi-byte character or an unfolded foreign word).
inline bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace covtrends
