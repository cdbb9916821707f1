// SPDX-License-Identifier: Apache-2.0

#include "covtrends/matcher.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "covtrends/errors.hpp"
#include "covtrends/normalize.hpp"

namespace covtrends {

namespace {

// Mutable trie used only during compilation. Inserting patterns in
// sorted order appends each node's children in increasing byte order,
// so the frozen edge arrays are sorted without an extra pass.
struct BuildNode {
  std::vector<std::pair<unsigned char, std::int32_t>> children;
  std::int32_t fail = 0;
  std::int32_t pattern = -1;
  std::int32_t out_link = -1;
};

std::int32_t child_of(const std::vector<BuildNode>& nodes, std::int32_t id,
                      unsigned char byte) {
  for (const auto& [b, target] : nodes[id].children)
    if (b == byte) return target;
  return -1;
}

}  // namespace

Matcher Matcher::compile(const Lexicon& lex) {
  if (lex.entries.empty())
    throw ArgumentError("compile_matcher: lexicon has no entries");

  Matcher m;

  // Group sorted entries by surface; collapse each country's kinds to
  // the highest priority (country > admin1 > city).
  std::size_t i = 0;
  while (i < lex.entries.size()) {
    const std::string& surface = lex.entries[i].surface;
    std::map<std::string, EntryKind> by_country;
    for (; i < lex.entries.size() && lex.entries[i].surface == surface; ++i) {
      const auto& e = lex.entries[i];
      const auto it = by_country.find(e.country);
      if (it == by_country.end() || static_cast<int>(e.kind) < static_cast<int>(it->second))
        by_country[e.country] = e.kind;
    }
    std::vector<CountryKind> payload;
    payload.reserve(by_country.size());
    for (const auto& [country, kind] : by_country)
      payload.push_back(CountryKind{country, kind});
    m.patterns_.push_back(surface);
    m.payloads_.push_back(std::move(payload));
  }

  std::vector<BuildNode> nodes(1);
  for (std::size_t pid = 0; pid < m.patterns_.size(); ++pid) {
    std::int32_t node = 0;
    for (unsigned char byte : m.patterns_[pid]) {
      std::int32_t next = child_of(nodes, node, byte);
      if (next == -1) {
        next = static_cast<std::int32_t>(nodes.size());
        nodes[node].children.emplace_back(byte, next);
        nodes.emplace_back();
      }
      node = next;
    }
    nodes[node].pattern = static_cast<std::int32_t>(pid);
  }

  // Failure links, breadth-first.
  std::deque<std::int32_t> queue;
  for (const auto& [byte, child] : nodes[0].children) {
    (void)byte;
    nodes[child].fail = 0;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    const std::int32_t u = queue.front();
    queue.pop_front();
    const std::int32_t fu = nodes[u].fail;
    nodes[u].out_link =
        nodes[fu].pattern != -1 ? fu : nodes[fu].out_link;
    for (const auto& [byte, v] : nodes[u].children) {
      std::int32_t f = fu;
      std::int32_t next;
      while ((next = child_of(nodes, f, byte)) == -1 && f != 0) f = nodes[f].fail;
      nodes[v].fail = next != -1 ? next : 0;
      queue.push_back(v);
    }
  }

  // Freeze into CSR form.
  m.nodes_.resize(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    Node& n = m.nodes_[id];
    n.edges_begin = static_cast<std::int32_t>(m.edge_bytes_.size());
    for (const auto& [byte, target] : nodes[id].children) {
      m.edge_bytes_.push_back(byte);
      m.edge_targets_.push_back(target);
    }
    n.edges_end = static_cast<std::int32_t>(m.edge_bytes_.size());
    n.fail = nodes[id].fail;
    n.pattern = nodes[id].pattern;
    n.out_link = nodes[id].out_link;
  }
  return m;
}

std::int32_t Matcher::find_edge(std::int32_t node, unsigned char byte) const {
  const Node& n = nodes_[node];
  const auto first = edge_bytes_.begin() + n.edges_begin;
  const auto last = edge_bytes_.begin() + n.edges_end;
  const auto it = std::lower_bound(first, last, byte);
  if (it == last || *it != byte) return -1;
  return edge_targets_[static_cast<std::size_t>(it - edge_bytes_.begin())];
}

std::vector<LocationTag> Matcher::tag_locations(std::string_view text) const {
  const NormalizedText norm = normalize_text(text);
  const std::string& s = norm.text;

  struct Candidate {
    std::uint32_t begin;
    std::uint32_t end;
    std::int32_t pattern;
  };
  std::vector<Candidate> candidates;

  std::int32_t state = 0;
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const auto byte = static_cast<unsigned char>(s[pos]);
    std::int32_t next;
    while ((next = find_edge(state, byte)) == -1 && state != 0)
      state = nodes_[state].fail;
    if (next != -1) state = next;

    for (std::int32_t n = nodes_[state].pattern != -1 ? state : nodes_[state].out_link;
         n != -1; n = nodes_[n].out_link) {
      const std::int32_t pid = nodes_[n].pattern;
      const auto len = static_cast<std::uint32_t>(patterns_[pid].size());
      const auto end = static_cast<std::uint32_t>(pos + 1);
      const std::uint32_t begin = end - len;
      const bool left_ok =
          begin == 0 || !is_word_byte(static_cast<unsigned char>(s[begin - 1]));
      const bool right_ok =
          end == s.size() || !is_word_byte(static_cast<unsigned char>(s[end]));
      if (left_ok && right_ok) candidates.push_back({begin, end, pid});
    }
  }

  // Leftmost-longest, non-overlapping.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.begin != b.begin) return a.begin < b.begin;
              return a.end > b.end;
            });
  std::vector<LocationTag> tags;
  std::int64_t current_end = -1;
  for (const Candidate& c : candidates) {
    if (static_cast<std::int64_t>(c.begin) < current_end) continue;
    const auto [src_begin, src_end] = norm.source_span(c.begin, c.end);
    for (const CountryKind& ck : payloads_[static_cast<std::size_t>(c.pattern)]) {
      tags.push_back(LocationTag{ck.country, c.begin, c.end, src_begin, src_end,
                                 patterns_[static_cast<std::size_t>(c.pattern)],
                                 ck.kind});
    }
    current_end = c.end;
  }
  return tags;
}

}  // namespace covtrends
