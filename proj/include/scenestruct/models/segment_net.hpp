// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/models/sequence_net.hpp"
#include "scenestruct/nn/layers.hpp"

namespace scenestruct {

enum class SegmentHead { kScalar, kPerTag };

std::string to_string(SegmentHead h);
SegmentHead segment_head_from_string(const std::string& s);

/// How per-tag proposal targets are built from the best-matching scene.
enum class PerTagTarget {
  kSoft,  // tag indicator x max tIoU
  kHard,  // tag indicator when max tIoU >= 0.5
};

struct SegmentNetConfig {
  SequenceNetConfig sequence;
  SegmentHead head = SegmentHead::kScalar;
  int num_tags = 1;                    // K; used by the per-tag head
  std::size_t max_duration_shots = 0;  // 0 = no cap (dense)
  PerTagTarget per_tag_target = PerTagTarget::kSoft;

  std::size_t output_dim() const { return head == SegmentHead::kScalar ? 1 : std::size_t(num_tags); }
  friend bool operator==(const SegmentNetConfig&, const SegmentNetConfig&) = default;
};

struct Proposal {
  ShotSpan shots;
  SegmentSpan span;
};

/// Every (i, j) with i <= j < M and j - i + 1 <= max_duration_shots, in
/// lexicographic order. max_duration_shots = 0 means M.
std::vector<ShotSpan> enumerate_proposals(std::size_t num_shots, std::size_t max_duration_shots);
std::vector<Proposal> video_proposals(const VideoRecord& video, std::size_t max_duration_shots);

/// Supervision for proposals. Scalar head: the best tIoU with any scene.
/// Per-tag head: the best-matching scene's tag indicators times that tIoU
/// (or thresholded, see PerTagTarget). Row-major, proposals x output_dim.
std::vector<double> proposal_targets(std::span<const SegmentSpan> proposals,
                                     std::span<const SceneAnnotation> scenes, SegmentHead head,
                                     int num_tags, PerTagTarget kind = PerTagTarget::kSoft);

/// Proposal scorer on a bi-LSTM base. A proposal (i, j) is summarised as
/// [h_i ; h_j ; mean(h_i..h_j)] and passed through a linear layer and sigmoid.
template <typename T>
class SegmentNet {
 public:
  SegmentNet() = default;
  explicit SegmentNet(const SegmentNetConfig& cfg);

  void init(nn::Rng& rng);

  const SegmentNetConfig& config() const { return cfg_; }
  SegmentHead head_mode() const { return cfg_.head; }
  ShotFusion<T>& fusion() { return fusion_; }
  const ShotFusion<T>& fusion() const { return fusion_; }
  nn::BiLstm<T>& lstm() { return lstm_; }
  const nn::BiLstm<T>& lstm() const { return lstm_; }
  nn::Dense<T>& head() { return head_; }

  /// Logits, row-major (proposal, output).
  std::vector<T> head_logits(const nn::Matrix<T>& hidden, std::span<const ShotSpan> proposals) const;
  nn::Matrix<T> head_backward(const nn::Matrix<T>& hidden, std::span<const ShotSpan> proposals,
                              std::span<const T> dlogits);

  BatchLoss<T> batch_loss(const nn::SequenceBatch<T>& fused,
                          const std::vector<std::vector<ShotSpan>>& proposals,
                          const std::vector<std::vector<T>>& targets, bool backprop);

  T step(const std::vector<const TrainingExample*>& batch, nn::Mode mode, nn::Rng* rng, bool backprop,
         std::size_t* count = nullptr);

  /// Eval-mode bi-LSTM states of the whole video (M x 2H).
  nn::Matrix<T> encode(const VideoRecord& video) const;

  /// Scores in [0,1], row-major (proposal, output_dim).
  std::vector<double> score_proposals(const nn::Matrix<T>& hidden,
                                      std::span<const ShotSpan> proposals) const;
  std::vector<double> forward(const VideoRecord& video, std::span<const ShotSpan> proposals) const;

  /// Scalar confidence per segment; segments must lie on shot boundaries.
  /// Throws ModeError for a per-tag head and AlignmentError for unaligned spans.
  std::vector<double> score_segments(const VideoRecord& video,
                                     std::span<const SegmentSpan> segments) const;

  nn::ParamList<T> params();

  nlohmann::ordered_json to_json() const;
  static SegmentNet from_json(const nlohmann::ordered_json& j);

 private:
  nn::Matrix<T> summaries(const nn::Matrix<T>& hidden, std::span<const ShotSpan> proposals) const;

  SegmentNetConfig cfg_;
  ShotFusion<T> fusion_;
  nn::BiLstm<T> lstm_;
  nn::Dense<T> head_;
};

/// Training item for a video with scenes: all proposals and their targets.
std::optional<TrainingExample> segment_example(const VideoRecord& video, const SegmentNetConfig& cfg);

}  // namespace scenestruct
