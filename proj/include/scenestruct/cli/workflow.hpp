// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/cli/experiment.hpp"
#include "scenestruct/eval/predictions.hpp"
#include "scenestruct/models/segment_net.hpp"
#include "scenestruct/models/trainer.hpp"
#include "scenestruct/pipeline/pipeline.hpp"

namespace scenestruct {

enum class NetKind { kBoundary, kSegment, kTag };

NetKind net_kind_from_string(const std::string& s);
std::string to_string(NetKind k);

struct TrainedModel {
  std::string checkpoint_file;  // file name inside the checkpoint directory
  nlohmann::ordered_json checkpoint;
  TrainResult result;
  std::size_t skipped_videos = 0;  // training videos without usable supervision
};

/// Trains one submodel on the train ids of `split`, early-stopping on the val ids.
TrainedModel train_model(NetKind kind, SegmentHead head, const Corpus& corpus, const CorpusSplit& split,
                         const ExperimentConfig& cfg, std::ostream* log = nullptr);

/// Adds a trained checkpoint to a bundle (the same object `load_bundle` would build).
void add_to_bundle(ModelBundle& bundle, const TrainedModel& model);

/// Predictions that carry spans only (no tags): the boundary net's partition,
/// or the NMS-kept proposals of a segment net.
std::vector<StructuredPrediction> boundary_span_predictions(const Corpus& corpus, const BoundaryNet<Real>& net,
                                                            const PipelineConfig& cfg);
std::vector<StructuredPrediction> segment_span_predictions(const Corpus& corpus, const SegmentNet<Real>& net,
                                                           const PipelineConfig& cfg);

/// Segment-free tagging mAP of a TagNet over every ground-truth scene of `corpus`.
double tag_net_map(const Corpus& corpus, const TagNet<Real>& net);

struct AblationRow {
  std::string mask;
  std::string metric;
  double value = 0.0;
  int best_epoch = 0;
};

/// Per-net ablation metric: tagging_map (tag), b_f1 (boundary), s_f1 (segment),
/// measured on `eval_corpus`.
AblationRow ablation_metric(const TrainedModel& model, NetKind kind, const Corpus& eval_corpus,
                            const PipelineConfig& pipeline);

/// Sorted by descending value; ties keep input order.
void write_ablation_csv(const std::filesystem::path& path, std::vector<AblationRow> rows);

}  // namespace scenestruct
