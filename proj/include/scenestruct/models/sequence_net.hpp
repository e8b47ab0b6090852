// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"
#include "scenestruct/nn/bilstm.hpp"
#include "scenestruct/nn/ops.hpp"
#include "scenestruct/nn/sequence_batch.hpp"
#include "scenestruct/repr/shot_fusion.hpp"

namespace scenestruct {

/// Scalar type used for training and inference; gradient checks instantiate double.
using Real = float;

/// Shared shape of the three submodels: fused shots -> 2-layer bi-LSTM.
struct SequenceNetConfig {
  FusionConfig fusion;
  std::map<std::string, std::size_t> input_dims;  // raw widths of enabled modalities
  std::size_t hidden_dim = 128;

  friend bool operator==(const SequenceNetConfig&, const SequenceNetConfig&) = default;
};

nlohmann::ordered_json to_json(const SequenceNetConfig& c);
SequenceNetConfig sequence_net_config_from_json(const nlohmann::ordered_json& j);

/// Throws CheckpointError when a trained network cannot read this manifest.
void check_manifest_compatible(const SequenceNetConfig& cfg, const CorpusManifest& manifest,
                               const std::string& net_name);

/// One training item: a shot span of a video plus flattened targets in the
/// network's logit layout. `proposals` is used by SegmentNet only.
struct TrainingExample {
  const VideoRecord* video = nullptr;
  ShotSpan span;
  std::vector<ShotSpan> proposals;  // relative to span.first
  std::vector<double> targets;
};

template <typename T>
struct BatchLoss {
  T loss = T(0);
  std::size_t count = 0;
  std::vector<std::vector<T>> probs;     // per item
  std::vector<nn::Matrix<T>> d_inputs;   // per item, padded_length rows; zero past length
};

/// Runs the bi-LSTM over every item of a padded batch, applies a head, and
/// evaluates mean BCE over all logits of all items. Padded rows are never
/// read, so the result is exactly independent of their values.
///
/// head_forward(item, hidden) -> logits
/// head_backward(item, hidden, dlogits) -> dL/dhidden
template <typename T, typename HeadForward, typename HeadBackward>
BatchLoss<T> run_sequence_batch(nn::BiLstm<T>& lstm, const nn::SequenceBatch<T>& batch,
                                const std::vector<std::vector<T>>& targets, T pos_weight,
                                bool backprop, HeadForward&& head_forward,
                                HeadBackward&& head_backward) {
  const std::size_t n = batch.size();
  if (targets.size() != n) throw DimensionError("batch and target counts differ");
  std::vector<typename nn::BiLstm<T>::Trace> traces(n);
  std::vector<nn::Matrix<T>> hidden(n);
  std::vector<T> all_probs, all_targets;
  std::vector<std::size_t> offsets(n + 1, 0);
  BatchLoss<T> out;
  out.probs.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    hidden[b] = lstm.forward(batch.sequences[b], batch.lengths[b], traces[b]);
    std::vector<T> logits = head_forward(b, hidden[b]);
    if (logits.size() != targets[b].size()) {
      throw DimensionError("item " + std::to_string(b) + ": " + std::to_string(logits.size()) +
                           " logits but " + std::to_string(targets[b].size()) + " targets");
    }
    for (T z : logits) out.probs[b].push_back(nn::sigmoid(z));
    all_probs.insert(all_probs.end(), out.probs[b].begin(), out.probs[b].end());
    all_targets.insert(all_targets.end(), targets[b].begin(), targets[b].end());
    offsets[b + 1] = all_probs.size();
  }
  auto bce = nn::bce_loss<T>(all_probs, all_targets, {}, pos_weight);
  out.loss = bce.loss;
  out.count = bce.count;
  if (!backprop) return out;

  out.d_inputs.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::span<const T> dlogits(bce.dlogits.data() + offsets[b], offsets[b + 1] - offsets[b]);
    nn::Matrix<T> d_hidden = head_backward(b, hidden[b], dlogits);
    nn::Matrix<T> d_x = lstm.backward(traces[b], d_hidden);
    nn::Matrix<T> padded(batch.padded_length, batch.feature_dim);
    std::copy(d_x.values().begin(), d_x.values().end(), padded.values().begin());
    out.d_inputs[b] = std::move(padded);
  }
  return out;
}

/// Fuses each example's shots, runs `batch_loss` on the padded batch, and
/// pushes input gradients back through the fusion encoders.
template <typename T, typename BatchFn>
T fused_step(ShotFusion<T>& fusion, const std::vector<const TrainingExample*>& batch, nn::Mode mode,
             nn::Rng* rng, bool backprop, std::size_t* count, BatchFn&& batch_loss) {
  std::vector<typename ShotFusion<T>::Trace> traces(batch.size());
  std::vector<nn::Matrix<T>> fused;
  fused.reserve(batch.size());
  for (std::size_t b = 0; b < batch.size(); ++b) {
    fused.push_back(fusion.forward(*batch[b]->video, batch[b]->span, mode, rng, &traces[b]));
  }
  auto sb = nn::SequenceBatch<T>::pad(std::move(fused));
  BatchLoss<T> res = batch_loss(sb);
  if (backprop) {
    for (std::size_t b = 0; b < batch.size(); ++b) {
      fusion.backward(traces[b], res.d_inputs[b].head_rows(sb.lengths[b]));
    }
  }
  if (count) *count = res.count;
  return res.loss;
}

template <typename T>
std::vector<std::vector<T>> cast_targets(const std::vector<const TrainingExample*>& batch) {
  std::vector<std::vector<T>> out;
  out.reserve(batch.size());
  for (const auto* ex : batch) out.emplace_back(ex->targets.begin(), ex->targets.end());
  return out;
}

}  // namespace scenestruct
