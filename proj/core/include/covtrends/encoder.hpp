// SPDX-License-Identifier: Apache-2.0
//
// Token encoders: text in, one d-dimensional vector per token out.
// The downstream pooling and classifier heads only see the interface,
// so a pretrained-transformer adapter can replace the reference
// encoder without touching them.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace covtrends {

// T x d row-major matrix of token representations.
struct TokenMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }
};

class TokenEncoder {
 public:
  virtual ~TokenEncoder() = default;
  virtual std::size_t dim() const = 0;
  // Throws EmptyInputError when the text yields zero tokens.
  virtual TokenMatrix encode(std::string_view text) const = 0;
};

// FNV-1a 64-bit string hash (offset 14695981039346656037,
// prime 1099511628211); the embedding row of a token is
// fnv1a64(token) % table_size.
std::uint64_t fnv1a64(std::string_view s);

// Lowercases ASCII and splits into maximal word-byte runs (ASCII
// alphanumerics plus any byte >= 0x80).
std::vector<std::string> tokenize_words(std::string_view text);

// The in-repo reference encoder: a trainable hashed-embedding table.
// Deterministic: the same (dim, table_size, seed, text) always yields
// the same matrix. Token rows are independent, so texts differing in
// one token differ only in that token's row.
class HashedEmbeddingEncoder final : public TokenEncoder {
 public:
  static constexpr std::size_t kDefaultDim = 64;
  static constexpr std::size_t kDefaultTableSize = 1u << 16;

  // Table entries initialized uniformly in [-1/sqrt(dim), 1/sqrt(dim)).
  HashedEmbeddingEncoder(std::size_t dim, std::size_t table_size,
                         std::uint64_t seed);

  std::size_t dim() const override { return dim_; }
  std::size_t table_size() const { return table_size_; }

  TokenMatrix encode(std::string_view text) const override;

  // Embedding rows backing encode()'s matrix rows, in token order.
  std::vector<std::uint32_t> token_rows(std::string_view text) const;

  // table_size x dim, row-major. Mutable for the trainer.
  std::vector<double>& table() { return table_; }
  const std::vector<double>& table() const { return table_; }

 private:
  std::size_t dim_;
  std::size_t table_size_;
  std::vector<double> table_;
};

}  // namespace covtrends
