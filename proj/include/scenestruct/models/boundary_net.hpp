// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/alignment.hpp"
#include "scenestruct/models/sequence_net.hpp"
#include "scenestruct/nn/layers.hpp"

namespace scenestruct {

struct BoundaryNetConfig {
  SequenceNetConfig sequence;
  double pos_weight = 1.0;

  friend bool operator==(const BoundaryNetConfig&, const BoundaryNetConfig&) = default;
};

/// Scene-boundary classifier. Score m (one per shot join) comes from
/// [h_m ; h_{m+1}] of the bi-LSTM through a linear layer and a sigmoid.
template <typename T>
class BoundaryNet {
 public:
  BoundaryNet() = default;
  explicit BoundaryNet(const BoundaryNetConfig& cfg);

  void init(nn::Rng& rng);

  const BoundaryNetConfig& config() const { return cfg_; }
  ShotFusion<T>& fusion() { return fusion_; }
  const ShotFusion<T>& fusion() const { return fusion_; }
  nn::BiLstm<T>& lstm() { return lstm_; }
  nn::Dense<T>& head() { return head_; }

  /// M-1 logits from an M x 2H hidden sequence.
  std::vector<T> head_logits(const nn::Matrix<T>& hidden) const;
  nn::Matrix<T> head_backward(const nn::Matrix<T>& hidden, std::span<const T> dlogits);

  /// Mean BCE over every shot boundary of every item; targets are M-1 labels per item.
  BatchLoss<T> batch_loss(const nn::SequenceBatch<T>& fused, const std::vector<std::vector<T>>& targets,
                          bool backprop);

  /// Full step from raw shots: fusion (with dropout in train mode) + batch_loss.
  T step(const std::vector<const TrainingExample*>& batch, nn::Mode mode, nn::Rng* rng, bool backprop,
         std::size_t* count = nullptr);

  /// Eval-mode boundary scores b_m in [0,1]; empty when the video has one shot.
  std::vector<double> scores(const VideoRecord& video) const;

  nn::ParamList<T> params();

  nlohmann::ordered_json to_json() const;
  static BoundaryNet from_json(const nlohmann::ordered_json& j);

 private:
  nn::Matrix<T> summary(const nn::Matrix<T>& hidden) const;

  BoundaryNetConfig cfg_;
  ShotFusion<T> fusion_;
  nn::BiLstm<T> lstm_;
  nn::Dense<T> head_;
};

/// Training item for a video with ground-truth scenes; nullopt when M < 2.
std::optional<TrainingExample> boundary_example(const VideoRecord& video,
                                                double tol_s = kBoundaryToleranceS);

/// Cuts the shot sequence at every m with b_m >= threshold_b. The result
/// tiles shots [0, M-1] and has (number of cuts + 1) spans.
std::vector<ShotSpan> boundaries_to_scenes(std::span<const double> scores, double threshold_b);

}  // namespace scenestruct
