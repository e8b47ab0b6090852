// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"
#include "scenestruct/models/segment_net.hpp"
#include "scenestruct/models/trainer.hpp"
#include "scenestruct/pipeline/pipeline.hpp"
#include "scenestruct/repr/shot_fusion.hpp"
#include "scenestruct/synth/generator.hpp"

namespace scenestruct {

struct ExperimentPaths {
  std::filesystem::path corpus = "corpus";
  std::filesystem::path checkpoints = "checkpoints";
  std::filesystem::path outputs = "outputs";
};

struct ModelSettings {
  std::size_t hidden_dim = 128;
  double boundary_pos_weight = 1.0;
  std::size_t segment_max_duration_shots = 0;
  PerTagTarget per_tag_target = PerTagTarget::kSoft;
};

enum class PredictSplit { kVal, kTrain, kAll };

struct ExperimentConfig {
  std::uint64_t seed = 7;
  ExperimentPaths paths;
  FusionConfig fusion;  // mask, encoders, dropout
  ModelSettings model;
  TrainConfig train;
  double val_fraction = 0.2;
  PredictSplit predict_on = PredictSplit::kVal;
  PipelineConfig pipeline;
  GeneratorConfig generator;
  std::string ablate_net = "tag";
  std::vector<std::string> ablate_masks;  // empty = every non-empty modality subset
  unsigned threads = 1;

  /// Pushes the single experiment seed into every component.
  void apply_seed(std::uint64_t s);
};

/// Reads a JSON config; relative paths resolve against the config's directory.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
ExperimentConfig experiment_config_from_json(const nlohmann::ordered_json& j,
                                             const std::filesystem::path& base_dir);
nlohmann::ordered_json to_json(const ExperimentConfig& c);

void write_resolved_config(const ExperimentConfig& c, const std::filesystem::path& dir);

struct CorpusSplit {
  std::vector<std::string> train;
  std::vector<std::string> val;
};

/// Seeded partition of video ids: ids are sorted, shuffled, and the first
/// round(val_fraction * n) (at least 1, at most n-1) become validation.
CorpusSplit split_corpus(const Corpus& corpus, double val_fraction, std::uint64_t seed);

/// The 31 non-empty subsets of the five modalities, each with the length scalar.
std::vector<ModalityMask> all_modality_subsets();

}  // namespace scenestruct
