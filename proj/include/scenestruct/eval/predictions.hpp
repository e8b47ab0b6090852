// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"

namespace scenestruct {

struct TagScore {
  int id = 0;  // 1-based tag id
  double score = 0.0;

  friend bool operator==(const TagScore&, const TagScore&) = default;
};

struct PredictedSegment {
  SegmentSpan span;
  std::optional<double> scene_score;  // absent in mode (a)
  std::vector<TagScore> tags;         // fused per-tag scores

  friend bool operator==(const PredictedSegment&, const PredictedSegment&) = default;
};

/// Ranked scene segments of one video with their fused tag scores.
struct StructuredPrediction {
  std::string video_id;
  std::vector<PredictedSegment> segments;

  friend bool operator==(const StructuredPrediction&, const StructuredPrediction&) = default;
};

/// Tags ordered by descending score, ties by ascending id (file order).
void sort_tags(std::vector<TagScore>& tags);

nlohmann::ordered_json prediction_to_json(const StructuredPrediction& p);
StructuredPrediction prediction_from_json(const nlohmann::json& j);

/// One JSON object per line.
void write_predictions(const std::filesystem::path& path,
                       const std::vector<StructuredPrediction>& preds);
std::vector<StructuredPrediction> read_predictions(const std::filesystem::path& path);

/// Ground truth expressed as predictions: every GT scene with score 1 for its tags
/// and 0 for the others.
std::vector<StructuredPrediction> ground_truth_as_predictions(const Corpus& corpus);

}  // namespace scenestruct
