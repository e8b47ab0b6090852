// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "scenestruct/models/sequence_net.hpp"
#include "scenestruct/nn/adam.hpp"

namespace scenestruct {

struct TrainConfig {
  double lr = 0.01;
  std::size_t batch_size = 32;
  int epochs = 50;
  int patience = 10;  // epochs without val improvement; 0 disables early stopping
  std::uint64_t seed = 0;
};

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  std::optional<double> val_loss;
};

struct TrainResult {
  std::vector<EpochRecord> trace;
  int best_epoch = 0;
  bool stopped_early = false;
};

// Independent random streams derived from one seed.
enum class RngStream : std::uint64_t { kInit = 1, kShuffle = 2, kDropout = 3, kSplit = 4 };

inline nn::Rng derive_rng(std::uint64_t seed, RngStream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return nn::Rng(seq);
}

template <typename Net>
double mean_loss(Net& net, const std::vector<TrainingExample>& examples, std::size_t batch_size) {
  double sum = 0.0;
  std::size_t total = 0;
  for (std::size_t b = 0; b < examples.size(); b += batch_size) {
    std::vector<const TrainingExample*> batch;
    for (std::size_t i = b; i < std::min(b + batch_size, examples.size()); ++i) batch.push_back(&examples[i]);
    std::size_t count = 0;
    const double loss = net.step(batch, nn::Mode::kEval, nullptr, false, &count);
    sum += loss * double(count);
    total += count;
  }
  return total == 0 ? 0.0 : sum / double(total);
}

/// Mini-batch Adam training with early stopping on the validation loss. The
/// parameters of the best validation epoch are restored at the end. Epoch
/// losses are means over every supervised output, not over batches.
template <typename Net>
TrainResult train_net(Net& net, const std::vector<TrainingExample>& train,
                      const std::vector<TrainingExample>& val, const TrainConfig& cfg,
                      const std::function<void(const EpochRecord&)>& on_epoch = {}) {
  if (train.empty()) throw ConfigError("no training examples");
  if (cfg.batch_size == 0) throw ConfigError("batch_size must be positive");
  using T = std::remove_reference_t<decltype(net.params()[0]->value(0, 0))>;

  nn::Rng shuffle_rng = derive_rng(cfg.seed, RngStream::kShuffle);
  nn::Rng dropout_rng = derive_rng(cfg.seed, RngStream::kDropout);
  nn::Adam<T> adam({cfg.lr});
  auto params = net.params();

  std::vector<nn::Matrix<T>> best;
  double best_val = std::numeric_limits<double>::infinity();
  int since_best = 0;
  TrainResult result;

  std::vector<std::size_t> order(train.size());
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    double sum = 0.0;
    std::size_t total = 0;
    for (std::size_t b = 0; b < order.size(); b += cfg.batch_size) {
      std::vector<const TrainingExample*> batch;
      for (std::size_t i = b; i < std::min(b + cfg.batch_size, order.size()); ++i) {
        batch.push_back(&train[order[i]]);
      }
      nn::zero_grads(params);
      std::size_t count = 0;
      const double loss = net.step(batch, nn::Mode::kTrain, &dropout_rng, true, &count);
      adam.step(params);
      sum += loss * double(count);
      total += count;
    }
    EpochRecord rec{epoch, total == 0 ? 0.0 : sum / double(total), std::nullopt};
    if (!val.empty()) rec.val_loss = mean_loss(net, val, cfg.batch_size);
    result.trace.push_back(rec);
    if (on_epoch) on_epoch(rec);

    if (!rec.val_loss) {
      result.best_epoch = epoch;
      continue;
    }
    if (*rec.val_loss < best_val) {
      best_val = *rec.val_loss;
      result.best_epoch = epoch;
      since_best = 0;
      best.clear();
      for (auto* p : params) best.push_back(p->value);
    } else if (cfg.patience > 0 && ++since_best >= cfg.patience) {
      result.stopped_early = true;
      break;
    }
  }
  if (!best.empty()) {
    for (std::size_t i = 0; i < params.size(); ++i) params[i]->value = best[i];
  }
  return result;
}

/// CSV with columns epoch,train_loss,val_loss (val_loss empty when absent).
void write_loss_trace(const std::filesystem::path& path, const std::vector<EpochRecord>& trace);

}  // namespace scenestruct
