// SPDX-License-Identifier: Apache-2.0

#include "covtrends/encoder.hpp"

#include <cmath>
#include <cstring>

#include "covtrends/errors.hpp"
#include "covtrends/normalize.hpp"
#include "covtrends/rng.hpp"

namespace covtrends {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw : text) {
    auto c = static_cast<unsigned char>(raw);
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    if (is_word_byte(c)) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

HashedEmbeddingEncoder::HashedEmbeddingEncoder(std::size_t dim,
                                               std::size_t table_size,
                                               std::uint64_t seed)
    : dim_(dim), table_size_(table_size) {
  if (dim == 0 || table_size == 0)
    throw ArgumentError("encoder: dim and table_size must be positive");
  table_.resize(dim_ * table_size_);
  SplitMix64 rng(mix64(seed ^ 0x656E636F64657231ULL));  // "encoder1"
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim_));
  for (double& v : table_) v = rng.symmetric(scale);
}

std::vector<std::uint32_t> HashedEmbeddingEncoder::token_rows(
    std::string_view text) const {
  const auto tokens = tokenize_words(text);
  if (tokens.empty())
    throw EmptyInputError("encode: text has no tokens: '" + std::string(text) + "'");
  std::vector<std::uint32_t> rows;
  rows.reserve(tokens.size());
  for (const auto& token : tokens)
    rows.push_back(static_cast<std::uint32_t>(fnv1a64(token) % table_size_));
  return rows;
}

TokenMatrix HashedEmbeddingEncoder::encode(std::string_view text) const {
  const auto rows = token_rows(text);
  TokenMatrix m;
  m.rows = rows.size();
  m.cols = dim_;
  m.data.resize(m.rows * m.cols);
  for (std::size_t t = 0; t < rows.size(); ++t)
    std::memcpy(&m.data[t * dim_], &table_[rows[t] * dim_], dim_ * sizeof(double));
  return m;
}

}  // namespace covtrends
