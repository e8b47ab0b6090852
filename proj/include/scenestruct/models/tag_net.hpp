// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "scenestruct/models/sequence_net.hpp"
#include "scenestruct/nn/layers.hpp"

namespace scenestruct {

struct TagNetConfig {
  SequenceNetConfig sequence;
  int num_tags = 1;

  friend bool operator==(const TagNetConfig&, const TagNetConfig&) = default;
};

/// Multi-label scene tagger. The scene's shots run through the bi-LSTM; the
/// forward state at the last shot and the backward state at the first shot
/// form a fixed-size summary, followed by a linear layer and sigmoid (K outputs).
template <typename T>
class TagNet {
 public:
  TagNet() = default;
  explicit TagNet(const TagNetConfig& cfg);

  void init(nn::Rng& rng);

  const TagNetConfig& config() const { return cfg_; }
  ShotFusion<T>& fusion() { return fusion_; }
  const ShotFusion<T>& fusion() const { return fusion_; }
  nn::BiLstm<T>& lstm() { return lstm_; }
  nn::Dense<T>& head() { return head_; }

  std::vector<T> head_logits(const nn::Matrix<T>& hidden) const;
  nn::Matrix<T> head_backward(const nn::Matrix<T>& hidden, std::span<const T> dlogits);

  BatchLoss<T> batch_loss(const nn::SequenceBatch<T>& fused, const std::vector<std::vector<T>>& targets,
                          bool backprop);

  T step(const std::vector<const TrainingExample*>& batch, nn::Mode mode, nn::Rng* rng, bool backprop,
         std::size_t* count = nullptr);

  /// Eval-mode tag scores t_k (index k-1) for shots [span.first, span.last].
  std::vector<double> scores(const VideoRecord& video, ShotSpan span) const;

  nn::ParamList<T> params();

  nlohmann::ordered_json to_json() const;
  static TagNet from_json(const nlohmann::ordered_json& j);

 private:
  nn::Matrix<T> summary(const nn::Matrix<T>& hidden) const;

  TagNetConfig cfg_;
  ShotFusion<T> fusion_;
  nn::BiLstm<T> lstm_;
  nn::Dense<T> head_;
};

/// One example per ground-truth scene (nearest shot span, multi-hot targets).
std::vector<TrainingExample> tag_examples(const VideoRecord& video, int num_tags);

}  // namespace scenestruct
