// SPDX-License-Identifier: Apache-2.0
//
// Multi-pattern matcher over lexicon surfaces: an Aho-Corasick
// automaton scanned over normalized text, followed by token-boundary
// filtering and leftmost-longest non-overlapping selection. An
// ambiguous surface (held by several countries) yields one tag per
// owning country on the shared span.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covtrends/lexicon.hpp"

namespace covtrends {

struct LocationTag {
  std::string country;          // ISO-3166 alpha-2
  std::uint32_t begin = 0;      // [begin, end) into the normalized text
  std::uint32_t end = 0;
  std::uint32_t src_begin = 0;  // recovered span into the original text
  std::uint32_t src_end = 0;
  std::string matched_surface;
  EntryKind kind = EntryKind::City;

  bool operator==(const LocationTag&) const = default;
};

class Matcher {
 public:
  // Deterministic compilation; throws ArgumentError on an empty
  // lexicon. The compiled automaton is immutable and safe to share
  // across threads.
  static Matcher compile(const Lexicon& lex);

  // Normalizes `text` and reports all token-boundary matches,
  // leftmost-longest, non-overlapping, ordered by span start (then
  // country for ambiguous surfaces). Pure and reentrant.
  std::vector<LocationTag> tag_locations(std::string_view text) const;

  std::size_t pattern_count() const { return patterns_.size(); }

 private:
  Matcher() = default;

  struct Node {
    std::int32_t edges_begin = 0;  // into edge_bytes_/edge_targets_
    std::int32_t edges_end = 0;
    std::int32_t fail = 0;
    std::int32_t pattern = -1;   // pattern ending here, -1 if none
    std::int32_t out_link = -1;  // nearest suffix node with a pattern
  };

  struct CountryKind {
    std::string country;
    EntryKind kind;  // highest-priority kind the country holds
  };

  std::int32_t find_edge(std::int32_t node, unsigned char byte) const;

  std::vector<Node> nodes_;
  std::vector<unsigned char> edge_bytes_;
  std::vector<std::int32_t> edge_targets_;
  std::vector<std::string> patterns_;                   // sorted surfaces
  std::vector<std::vector<CountryKind>> payloads_;      // per pattern
};

}  // namespace covtrends
