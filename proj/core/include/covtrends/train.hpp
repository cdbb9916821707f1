// SPDX-License-Identifier: Apache-2.0
//
// Mini-batch gradient descent over the full model: embedding table,
// attention vector, and all head weights/biases, minimizing mean
// cross-entropy. Deterministic given the seed. grad_check compares the
// analytic gradients against central finite differences.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "covtrends/sentiment.hpp"

namespace covtrends {

struct TrainConfig {
  double learning_rate = 0.0005;
  std::size_t batch_size = 32;
  std::size_t epochs = 12;
  std::uint64_t seed = 0;
};

struct LossTrace {
  // trace[epoch][head] = mean training cross-entropy of that epoch.
  std::vector<std::array<double, 3>> per_epoch;
};

// Each head trains only on the examples whose dataset matches its
// trained_on id; a head with zero examples is an error. Requires the
// reference encoder (the embedding table is a trained parameter).
LossTrace train(SentimentModel& model, const std::vector<LabeledExample>& examples,
                const TrainConfig& config);

// Max relative error between analytic and central finite-difference
// gradients of the mean cross-entropy over `batch`, taken over w_att,
// every head's W and b, and the embedding rows the batch touches.
// Relative error uses max(|a|+|n|, 1e-6) in the denominator so
// zero-gradient parameters compare cleanly against finite-difference
// noise.
double grad_check(SentimentModel& model, const std::vector<LabeledExample>& batch,
                  double step = 1e-5);

}  // namespace covtrends
