// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"
#include "scenestruct/eval/predictions.hpp"
#include "scenestruct/models/boundary_net.hpp"
#include "scenestruct/models/segment_net.hpp"
#include "scenestruct/models/tag_net.hpp"

namespace scenestruct {

enum class PipelineMode { kA, kB, kC, kD };
enum class RankKey { kMax, kMean };

std::string to_string(PipelineMode m);
PipelineMode pipeline_mode_from_string(const std::string& s);

struct PipelineConfig {
  PipelineMode mode = PipelineMode::kD;
  double threshold_b = 0.65;
  double nms_tiou = 0.0;
  std::size_t max_duration_shots = 0;  // 0 = every span of the video
  std::size_t top_n_segments = 0;      // 0 = unlimited
  RankKey mode_c_key = RankKey::kMax;

  void validate() const;
  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

nlohmann::ordered_json to_json(const PipelineConfig& c);
PipelineConfig pipeline_config_from_json(const nlohmann::ordered_json& j, PipelineConfig base = {});

/// Greedy temporal NMS. Returns indices of kept spans, highest score first;
/// equal scores keep input order. A span is dropped when its tIoU with an
/// already kept span is strictly greater than nms_tiou.
std::vector<std::size_t> nms_temporal(std::span<const SegmentSpan> spans, std::span<const double> scores,
                                      double nms_tiou);

inline constexpr const char* kBoundaryCheckpoint = "boundary.ckpt.json";
inline constexpr const char* kSegmentCheckpoint = "segment.ckpt.json";
inline constexpr const char* kSegmentPerTagCheckpoint = "segment_per_tag.ckpt.json";
inline constexpr const char* kTagCheckpoint = "tag.ckpt.json";

struct ModelBundle {
  std::optional<BoundaryNet<Real>> boundary;
  std::optional<SegmentNet<Real>> segment;          // scalar head
  std::optional<SegmentNet<Real>> segment_per_tag;  // per-tag head
  std::optional<TagNet<Real>> tag;

  int num_tags() const;
};

nlohmann::ordered_json read_checkpoint_file(const std::filesystem::path& path);
void write_checkpoint_file(const std::filesystem::path& path, const nlohmann::ordered_json& j);

/// Loads whichever checkpoints exist in `dir`.
ModelBundle load_bundle(const std::filesystem::path& dir);

/// Throws CheckpointError naming the first net that `mode` needs but the bundle lacks.
void require_nets(const ModelBundle& bundle, PipelineMode mode);

/// Throws CheckpointError when a net was trained on different modality widths or K.
void check_bundle_compatible(const ModelBundle& bundle, const CorpusManifest& manifest);

StructuredPrediction run_pipeline(const VideoRecord& video, const ModelBundle& bundle,
                                  const PipelineConfig& cfg);

/// One prediction per video, in corpus order. Results do not depend on `threads`.
std::vector<StructuredPrediction> predict_corpus(const Corpus& corpus, const ModelBundle& bundle,
                                                 const PipelineConfig& cfg, unsigned threads = 1);

}  // namespace scenestruct
