// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"
#include "scenestruct/eval/predictions.hpp"

namespace scenestruct {

/// Temporal IoU of two intervals in seconds; 0 for disjoint or touching spans.
double tiou(const SegmentSpan& a, const SegmentSpan& b);

inline constexpr std::size_t kNumTiouThresholds = 10;
/// 0.50, 0.55, ..., 0.95
std::array<double, kNumTiouThresholds> tiou_thresholds();

inline constexpr double kBoundaryF1ToleranceS = 0.5;
inline constexpr double kSceneF1Threshold = 0.75;

/// A scored detection of one class; `video` keys matching to ground truth.
struct Detection {
  std::size_t video = 0;
  SegmentSpan span;
  double score = 0.0;
};

struct GroundTruthSpan {
  std::size_t video = 0;
  SegmentSpan span;
};

/// Detections ranked by descending score, ties by earlier start, then
/// earlier end, then input order. Returns indices into `dets`.
std::vector<std::size_t> rank_detections(std::span<const Detection> dets);

/// Non-interpolated AP: each ranked detection takes the highest-tIoU unmatched
/// ground truth of its video with tIoU >= thresh; AP = sum of precision at
/// true positives / number of ground truths. nullopt when there is no ground truth.
std::optional<double> average_precision(std::span<const Detection> dets,
                                        std::span<const GroundTruthSpan> gts, double tiou_thresh);

struct F1Score {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  std::size_t true_positives = 0;
  std::size_t num_pred = 0;
  std::size_t num_gt = 0;
};

/// f1 from match counts; two empty sets agree perfectly (f1 = 1).
F1Score f1_from_counts(std::size_t tp, std::size_t num_pred, std::size_t num_gt);

/// One-to-one boundary matching with |pred - gt| < tol (strict). Predictions are
/// taken in ascending time and each takes the earliest unmatched ground truth in
/// range, which yields a maximum matching.
F1Score boundary_f1(std::span<const double> pred, std::span<const double> gt,
                    double tol_s = kBoundaryF1ToleranceS);

/// One-to-one segment matching by descending tIoU with tIoU > thresh (strict).
F1Score scene_f1(std::span<const SegmentSpan> pred, std::span<const SegmentSpan> gt,
                 double tiou_thresh = kSceneF1Threshold);

struct TaggingMapResult {
  double map = 0.0;
  std::map<int, double> per_class;  // classes with at least one positive
};

/// Segment-free multi-label mAP: `scores[i][k-1]` is scene i's score for tag k.
/// Ranking is stable (equal scores keep input order).
TaggingMapResult tagging_map(const std::vector<std::vector<double>>& scores,
                             const std::vector<std::vector<int>>& tags, int num_tags);

struct AvgMapResult {
  double avg_map = 0.0;
  std::array<double, kNumTiouThresholds> per_threshold{};
  std::map<int, double> per_class;  // AP averaged over thresholds
};

/// mAP over classes with ground truth, averaged over the tIoU sweep.
/// `gt_videos[i]` is the ground-truth video of `preds[i]`.
AvgMapResult avg_map(const std::vector<StructuredPrediction>& preds,
                     const std::vector<const VideoRecord*>& gt_videos, int num_tags);

struct MetricReport {
  double avg_map = 0.0;
  double b_f1 = 0.0;
  double s_f1 = 0.0;
  double final_score = 0.0;  // avg_map * b_f1
  F1Score boundary;
  F1Score scene;
  std::array<double, kNumTiouThresholds> per_threshold{};
  std::map<int, double> per_class;
};

/// Scores every predicted video against its ground truth in `corpus`.
/// Throws DataError for unknown videos or videos without scenes.
MetricReport evaluate(const std::vector<StructuredPrediction>& preds, const Corpus& corpus);

nlohmann::ordered_json report_to_json(const MetricReport& r);
std::string report_to_csv(const MetricReport& r);
void write_report(const MetricReport& r, const std::filesystem::path& json_path,
                  const std::filesystem::path& csv_path);

/// "%.2f" label used for thresholds in reports.
std::string threshold_label(double t);

}  // namespace scenestruct
