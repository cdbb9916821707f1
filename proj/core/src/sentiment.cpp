// SPDX-License-Identifier: Apache-2.0

#include "covtrends/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include "covtrends/errors.hpp"
#include "covtrends/rng.hpp"

namespace covtrends {

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Negative: return "negative";
    case SentimentLabel::Neutral: return "neutral";
    case SentimentLabel::Positive: return "positive";
  }
  return "neutral";
}

std::optional<SentimentLabel> label_from_string(std::string_view s) {
  std::string folded(s);
  for (char& c : folded)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  if (folded == "negative") return SentimentLabel::Negative;
  if (folded == "neutral") return SentimentLabel::Neutral;
  if (folded == "positive") return SentimentLabel::Positive;
  return std::nullopt;
}

SentimentModel make_reference_model(std::size_t dim, std::size_t table_size,
                                    std::uint64_t seed,
                                    const std::array<std::string, 3>& head_datasets) {
  SentimentModel model;
  model.encoder = std::make_shared<HashedEmbeddingEncoder>(dim, table_size, seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

  SplitMix64 att_rng(mix64(seed ^ 0x6174746E31ULL));  // "attn1"
  model.att.w_att.resize(dim);
  for (double& v : model.att.w_att) v = att_rng.symmetric(scale);

  for (std::size_t i = 0; i < model.heads.size(); ++i) {
    ClassifierHead& head = model.heads[i];
    head.trained_on = head_datasets[i];
    head.weights.resize(kNumClasses * dim);
    head.bias.fill(0.0);
    SplitMix64 head_rng(mix64(seed ^ (0x6865616400ULL + i)));  // "head"+i
    for (double& v : head.weights) v = head_rng.symmetric(scale);
  }
  return model;
}

namespace {

// In-place softmax with max subtraction.
void softmax(std::vector<double>& z) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    sum += v;
  }
  for (double& v : z) v /= sum;
}

}  // namespace

PoolResult attention_pool(const TokenMatrix& h, const AttentionParams& att) {
  if (h.rows == 0 || h.cols == 0)
    throw ArgumentError("attention_pool: empty token matrix");
  if (att.w_att.size() != h.cols)
    throw ArgumentError("attention_pool: attention dimension " +
                        std::to_string(att.w_att.size()) + " != token dimension " +
                        std::to_string(h.cols));

  PoolResult out;
  out.weights.resize(h.rows);
  for (std::size_t t = 0; t < h.rows; ++t) {
    double alpha = 0.0;
    const double* row = h.row(t);
    for (std::size_t j = 0; j < h.cols; ++j) alpha += att.w_att[j] * row[j];
    out.weights[t] = alpha;
  }
  softmax(out.weights);

  out.pooled.assign(h.cols, 0.0);
  for (std::size_t t = 0; t < h.rows; ++t) {
    const double e = out.weights[t];
    const double* row = h.row(t);
    for (std::size_t j = 0; j < h.cols; ++j) out.pooled[j] += e * row[j];
  }
  return out;
}

std::array<double, 3> head_scores(const std::vector<double>& pooled,
                                  const ClassifierHead& head) {
  const std::size_t d = pooled.size();
  if (head.weights.size() != kNumClasses * d)
    throw ArgumentError("head_scores: weight matrix is " +
                        std::to_string(head.weights.size()) + " values, expected " +
                        std::to_string(kNumClasses * d));
  std::vector<double> z(kNumClasses);
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    double acc = head.bias[c];
    const double* w = head.weights.data() + c * d;
    for (std::size_t j = 0; j < d; ++j) acc += w[j] * pooled[j];
    z[c] = acc;
  }
  softmax(z);
  return {z[0], z[1], z[2]};
}

SentimentLabel argmax_label(const std::array<double, 3>& probs) {
  static constexpr SentimentLabel kTieOrder[] = {
      SentimentLabel::Neutral, SentimentLabel::Negative, SentimentLabel::Positive};
  SentimentLabel best = SentimentLabel::Neutral;
  double best_p = -1.0;
  for (SentimentLabel label : kTieOrder) {
    const double p = probs[static_cast<std::size_t>(label)];
    if (p > best_p) {
      best_p = p;
      best = label;
    }
  }
  return best;
}

SentimentLabel majority_vote(const std::array<SentimentLabel, 3>& labels) {
  int counts[3] = {0, 0, 0};
  for (SentimentLabel l : labels) ++counts[static_cast<std::size_t>(l)];
  for (std::size_t c = 0; c < 3; ++c)
    if (counts[c] >= 2) return static_cast<SentimentLabel>(c);
  return SentimentLabel::Neutral;
}

Classification classify(const SentimentModel& model, std::string_view text) {
  const TokenMatrix h = model.encoder->encode(text);
  const PoolResult pool = attention_pool(h, model.att);
  Classification result{};
  for (std::size_t i = 0; i < model.heads.size(); ++i)
    result.per_head[i] = argmax_label(head_scores(pool.pooled, model.heads[i]));
  result.final_label = majority_vote(result.per_head);
  return result;
}

namespace {

std::optional<long> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
    if (s.size() == 1) return std::nullopt;
  }
  long value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

SentimentLabel harmonize_label(std::string_view dataset, std::string_view raw) {
  if (dataset == "sst") {
    const auto v = parse_int(raw);
    if (!v || *v < 0 || *v > 4)
      throw FormatError("sst label out of range [0,4]: '" + std::string(raw) + "'");
    if (*v <= 1) return SentimentLabel::Negative;
    if (*v == 2) return SentimentLabel::Neutral;
    return SentimentLabel::Positive;
  }
  if (dataset == "semeval15-t10") {
    const auto label = label_from_string(raw);
    if (!label)
      throw FormatError("semeval15-t10 label must be negative/neutral/positive: '" +
                        std::string(raw) + "'");
    return *label;
  }
  if (dataset == "semeval15-t11") {
    const auto v = parse_int(raw);
    if (!v || *v < -5 || *v > 5)
      throw FormatError("semeval15-t11 label out of range [-5,5]: '" +
                        std::string(raw) + "'");
    if (*v < 0) return SentimentLabel::Negative;
    if (*v == 0) return SentimentLabel::Neutral;
    return SentimentLabel::Positive;
  }
  throw FormatError("unknown dataset id: '" + std::string(dataset) + "'");
}

std::vector<LabeledExample> read_labeled_tsv(std::istream& in) {
  std::vector<LabeledExample> examples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                       : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw FormatError("training TSV line " + std::to_string(line_no) +
                        ": expected dataset<TAB>label<TAB>text");
    const std::string dataset = line.substr(0, tab1);
    const std::string raw = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string text = line.substr(tab2 + 1);
    if (text.empty())
      throw FormatError("training TSV line " + std::to_string(line_no) +
                        ": empty text");
    examples.push_back(
        LabeledExample{std::move(text), harmonize_label(dataset, raw), dataset});
  }
  return examples;
}

std::vector<LabeledExample> read_labeled_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open training TSV: " + path);
  return read_labeled_tsv(in);
}

}  // namespace covtrends
