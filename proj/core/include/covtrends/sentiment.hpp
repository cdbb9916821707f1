// SPDX-License-Identifier: Apache-2.0
//
// Sentiment scoring: attention pooling over token representations,
// three linear-softmax classifier heads (one per training dataset),
// and a majority vote over their argmax labels.

#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covtrends/encoder.hpp"

namespace covtrends {

enum class SentimentLabel : int {
  Negative = 0,
  Neutral = 1,
  Positive = 2,
};

inline constexpr std::size_t kNumClasses = 3;

std::string_view to_string(SentimentLabel label);
std::optional<SentimentLabel> label_from_string(std::string_view s);

struct AttentionParams {
  std::vector<double> w_att;  // dimension d
};

struct ClassifierHead {
  std::vector<double> weights;       // 3 x d, row-major
  std::array<double, 3> bias{};      // 3
  std::string trained_on;            // dataset identifier
};

struct SentimentModel {
  std::shared_ptr<TokenEncoder> encoder;
  AttentionParams att;
  std::array<ClassifierHead, 3> heads;

  std::size_t dim() const { return encoder->dim(); }
};

// Fresh model around the reference encoder. Head weights and the
// attention vector are initialized uniformly in +-1/sqrt(d), biases at
// zero; every stream is derived from `seed`, so construction is
// deterministic.
SentimentModel make_reference_model(std::size_t dim, std::size_t table_size,
                                    std::uint64_t seed,
                                    const std::array<std::string, 3>& head_datasets);

struct PoolResult {
  std::vector<double> pooled;   // H, dimension d
  std::vector<double> weights;  // e, dimension T, sums to 1
};

// alpha_t = w_att . h_t; e = softmax(alpha) with max subtraction;
// H = sum_t e_t h_t. Throws ArgumentError on dimension mismatch or an
// empty matrix.
PoolResult attention_pool(const TokenMatrix& h, const AttentionParams& att);

// softmax(W H + b). Throws ArgumentError on dimension mismatch.
std::array<double, 3> head_scores(const std::vector<double>& pooled,
                                  const ClassifierHead& head);

// Argmax with ties broken toward Neutral, then Negative, then
// Positive.
SentimentLabel argmax_label(const std::array<double, 3>& probs);

// A label held by at least 2 of the 3 voters wins; a three-way split
// returns Neutral.
SentimentLabel majority_vote(const std::array<SentimentLabel, 3>& labels);

struct Classification {
  std::array<SentimentLabel, 3> per_head;
  SentimentLabel final_label;
};

Classification classify(const SentimentModel& model, std::string_view text);

// Maps a dataset-native label onto {Negative, Neutral, Positive}:
//   sst            five classes: 0,1 -> Negative; 2 -> Neutral; 3,4 -> Positive
//   semeval15-t10  string labels negative/neutral/positive by name
//   semeval15-t11  integer scale -5..5: sign decides, 0 is Neutral
// Throws FormatError for unknown datasets or out-of-range labels.
SentimentLabel harmonize_label(std::string_view dataset, std::string_view raw);

struct LabeledExample {
  std::string text;
  SentimentLabel label;
  std::string dataset;
};

// TSV rows: dataset_id <tab> raw_label <tab> text. Labels are
// harmonized on read.
std::vector<LabeledExample> read_labeled_tsv(std::istream& in);
std::vector<LabeledExample> read_labeled_tsv_file(const std::string& path);

}  // namespace covtrends
