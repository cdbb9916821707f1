// SPDX-License-Identifier: Apache-2.0

#include "covtrends/train.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "covtrends/errors.hpp"
#include "covtrends/rng.hpp"

namespace covtrends {

namespace {

struct Gradients {
  std::vector<double> w_att;
  std::array<std::vector<double>, 3> head_w;
  std::array<std::array<double, 3>, 3> head_b{};
  std::map<std::uint32_t, std::vector<double>> embed;

  explicit Gradients(std::size_t dim) : w_att(dim, 0.0) {
    for (auto& w : head_w) w.assign(kNumClasses * dim, 0.0);
    for (auto& b : head_b) b.fill(0.0);
  }
};

// Forward pass for one example through one head; returns the
// cross-entropy loss and, when `grads` is given, accumulates the
// analytic gradients scaled by `grad_scale`.
double forward_backward(const SentimentModel& model,
                        const std::vector<double>& table,
                        const std::vector<std::uint32_t>& rows,
                        SentimentLabel label, std::size_t head_idx,
                        Gradients* grads, double grad_scale) {
  const std::size_t d = model.att.w_att.size();
  const std::size_t T = rows.size();
  const ClassifierHead& head = model.heads[head_idx];

  auto h_row = [&](std::size_t t) { return table.data() + rows[t] * d; };

  // alpha, e = softmax(alpha)
  std::vector<double> e(T);
  for (std::size_t t = 0; t < T; ++t) {
    const double* h = h_row(t);
    double alpha = 0.0;
    for (std::size_t j = 0; j < d; ++j) alpha += model.att.w_att[j] * h[j];
    e[t] = alpha;
  }
  const double amax = *std::max_element(e.begin(), e.end());
  double esum = 0.0;
  for (double& v : e) {
    v = std::exp(v - amax);
    esum += v;
  }
  for (double& v : e) v /= esum;

  // H = sum_t e_t h_t
  std::vector<double> H(d, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    const double* h = h_row(t);
    for (std::size_t j = 0; j < d; ++j) H[j] += e[t] * h[j];
  }

  // p = softmax(W H + b)
  std::array<double, 3> p{};
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    double acc = head.bias[c];
    const double* w = head.weights.data() + c * d;
    for (std::size_t j = 0; j < d; ++j) acc += w[j] * H[j];
    p[c] = acc;
  }
  const double zmax = *std::max_element(p.begin(), p.end());
  double psum = 0.0;
  for (double& v : p) {
    v = std::exp(v - zmax);
    psum += v;
  }
  for (double& v : p) v /= psum;

  const auto y = static_cast<std::size_t>(label);
  const double loss = -std::log(std::max(p[y], 1e-300));
  if (grads == nullptr) return loss;

  // dz = p - onehot(y)
  std::array<double, 3> dz = p;
  dz[y] -= 1.0;

  std::vector<double> dH(d, 0.0);
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    grads->head_b[head_idx][c] += grad_scale * dz[c];
    double* gw = grads->head_w[head_idx].data() + c * d;
    const double* w = head.weights.data() + c * d;
    for (std::size_t j = 0; j < d; ++j) {
      gw[j] += grad_scale * dz[c] * H[j];
      dH[j] += dz[c] * w[j];
    }
  }

  // Through the pooling: de_t = dH . h_t, dalpha via softmax Jacobian.
  std::vector<double> de(T, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    const double* h = h_row(t);
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += dH[j] * h[j];
    de[t] = acc;
  }
  double dot = 0.0;
  for (std::size_t t = 0; t < T; ++t) dot += e[t] * de[t];

  for (std::size_t t = 0; t < T; ++t) {
    const double dalpha = e[t] * (de[t] - dot);
    const double* h = h_row(t);
    for (std::size_t j = 0; j < d; ++j)
      grads->w_att[j] += grad_scale * dalpha * h[j];

    auto [it, inserted] = grads->embed.try_emplace(rows[t]);
    if (inserted) it->second.assign(d, 0.0);
    std::vector<double>& ge = it->second;
    // dh_t = e_t dH + dalpha w_att
    for (std::size_t j = 0; j < d; ++j)
      ge[j] += grad_scale * (e[t] * dH[j] + dalpha * model.att.w_att[j]);
  }
  return loss;
}

HashedEmbeddingEncoder& trainable_encoder(SentimentModel& model) {
  auto* enc = dynamic_cast<HashedEmbeddingEncoder*>(model.encoder.get());
  if (enc == nullptr)
    throw ArgumentError("training requires the reference hashed-embedding encoder");
  return *enc;
}

void apply(SentimentModel& model, std::vector<double>& table, const Gradients& g,
           double lr) {
  const std::size_t d = model.att.w_att.size();
  for (std::size_t j = 0; j < d; ++j) model.att.w_att[j] -= lr * g.w_att[j];
  for (std::size_t i = 0; i < model.heads.size(); ++i) {
    ClassifierHead& head = model.heads[i];
    for (std::size_t k = 0; k < head.weights.size(); ++k)
      head.weights[k] -= lr * g.head_w[i][k];
    for (std::size_t c = 0; c < kNumClasses; ++c)
      head.bias[c] -= lr * g.head_b[i][c];
  }
  for (const auto& [row, grad] : g.embed) {
    double* base = table.data() + row * d;
    for (std::size_t j = 0; j < d; ++j) base[j] -= lr * grad[j];
  }
}

}  // namespace

LossTrace train(SentimentModel& model, const std::vector<LabeledExample>& examples,
                const TrainConfig& config) {
  if (config.batch_size == 0) throw ArgumentError("train: batch_size must be >= 1");
  if (config.epochs == 0) throw ArgumentError("train: epochs must be >= 1");
  HashedEmbeddingEncoder& encoder = trainable_encoder(model);

  // Token rows are fixed for the whole run; compute them once.
  std::vector<std::vector<std::uint32_t>> rows(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i)
    rows[i] = encoder.token_rows(examples[i].text);

  std::array<std::vector<std::size_t>, 3> per_head;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    for (std::size_t h = 0; h < model.heads.size(); ++h)
      if (examples[i].dataset == model.heads[h].trained_on)
        per_head[h].push_back(i);
  }
  for (std::size_t h = 0; h < model.heads.size(); ++h)
    if (per_head[h].empty())
      throw ArgumentError("train: head " + std::to_string(h) + " (dataset '" +
                          model.heads[h].trained_on + "') has no examples");

  const std::size_t d = model.att.w_att.size();
  LossTrace trace;
  trace.per_epoch.resize(config.epochs);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t h = 0; h < model.heads.size(); ++h) {
      // Deterministic per-(epoch, head) shuffle stream.
      SplitMix64 rng(mix64(config.seed ^ (0x747261696EULL + epoch * 8 + h)));  // "train"
      std::vector<std::size_t> order = per_head[h];
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(order.size() - i));
        std::swap(order[i], order[j]);
      }

      double loss_sum = 0.0;
      for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
        const std::size_t count = std::min(config.batch_size, order.size() - start);
        Gradients grads(d);
        const double scale = 1.0 / static_cast<double>(count);
        for (std::size_t k = 0; k < count; ++k) {
          const std::size_t idx = order[start + k];
          loss_sum += forward_backward(model, encoder.table(), rows[idx],
                                       examples[idx].label, h, &grads, scale);
        }
        apply(model, encoder.table(), grads, config.learning_rate);
      }
      trace.per_epoch[epoch][h] = loss_sum / static_cast<double>(order.size());
    }
  }
  return trace;
}

double grad_check(SentimentModel& model, const std::vector<LabeledExample>& batch,
                  double step) {
  if (batch.empty()) throw ArgumentError("grad_check: batch must be non-empty");
  HashedEmbeddingEncoder& encoder = trainable_encoder(model);
  const std::size_t d = model.att.w_att.size();

  std::vector<std::vector<std::uint32_t>> rows(batch.size());
  std::vector<std::size_t> head_of(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    rows[i] = encoder.token_rows(batch[i].text);
    std::size_t h = model.heads.size();
    for (std::size_t k = 0; k < model.heads.size(); ++k)
      if (batch[i].dataset == model.heads[k].trained_on) {
        h = k;
        break;
      }
    if (h == model.heads.size())
      throw ArgumentError("grad_check: no head trained on dataset '" +
                          batch[i].dataset + "'");
    head_of[i] = h;
  }

  const double scale = 1.0 / static_cast<double>(batch.size());
  auto mean_loss = [&]() {
    double sum = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i)
      sum += forward_backward(model, encoder.table(), rows[i], batch[i].label,
                              head_of[i], nullptr, 0.0);
    return sum * scale;
  };

  Gradients grads(d);
  for (std::size_t i = 0; i < batch.size(); ++i)
    forward_backward(model, encoder.table(), rows[i], batch[i].label, head_of[i],
                     &grads, scale);

  double max_rel = 0.0;
  auto check = [&](double* param, double analytic) {
    const double saved = *param;
    *param = saved + step;
    const double up = mean_loss();
    *param = saved - step;
    const double down = mean_loss();
    *param = saved;
    const double numeric = (up - down) / (2.0 * step);
    const double rel = std::abs(analytic - numeric) /
                       std::max(std::abs(analytic) + std::abs(numeric), 1e-6);
    max_rel = std::max(max_rel, rel);
  };

  for (std::size_t j = 0; j < d; ++j) check(&model.att.w_att[j], grads.w_att[j]);
  for (std::size_t h = 0; h < model.heads.size(); ++h) {
    for (std::size_t k = 0; k < model.heads[h].weights.size(); ++k)
      check(&model.heads[h].weights[k], grads.head_w[h][k]);
    for (std::size_t c = 0; c < kNumClasses; ++c)
      check(&model.heads[h].bias[c], grads.head_b[h][c]);
  }
  for (const auto& [row, grad] : grads.embed) {
    double* base = encoder.table().data() + row * d;
    for (std::size_t j = 0; j < d; ++j) check(&base[j], grad[j]);
  }
  return max_rel;
}

}  // namespace covtrends
