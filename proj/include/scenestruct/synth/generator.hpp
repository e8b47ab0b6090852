// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"

namespace scenestruct {

struct ModalitySignal {
  std::size_t dim = 16;
  bool tag_signal = false;       // features carry the scene's tag prototypes
  bool boundary_signal = false;  // features carry a per-scene style vector
  double noise_std = 0.5;        // per-shot noise on signal-carrying modalities
  friend bool operator==(const ModalitySignal&, const ModalitySignal&) = default;
};

struct GeneratorConfig {
  std::size_t num_videos = 100;
  double duration_mean = 42.74;
  double duration_std = 14.16;
  double duration_min = 5.0;
  double duration_max = 120.0;
  int scenes_min = 2;
  int scenes_max = 6;
  int shots_per_scene_min = 1;
  int shots_per_scene_max = 4;
  double min_scene_s = 1.0;
  double min_shot_s = 0.3;
  int num_tags = 8;
  int tags_per_scene_min = 1;
  int tags_per_scene_max = 2;
  std::map<std::string, ModalitySignal> modalities = default_modalities();
  double boundary_min_distance = 1.0;  // RMS distance between consecutive scene styles
  int num_styles = 8;                  // style palette size; 0 draws a fresh style per scene
  double zipf_exponent = 0.0;          // 0 = uniform tag popularity
  std::uint64_t seed = 7;

  static std::map<std::string, ModalitySignal> default_modalities();
  void validate() const;
  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

nlohmann::ordered_json to_json(const GeneratorConfig& c);
GeneratorConfig generator_config_from_json(const nlohmann::ordered_json& j, GeneratorConfig base = {});

struct GenerationResult {
  Corpus corpus;
  // Tag prototypes per tag-carrying modality: [tag-1][component].
  std::map<std::string, std::vector<std::vector<double>>> tag_prototypes;
};

GenerationResult generate_corpus(const GeneratorConfig& cfg);

struct CorpusStats {
  std::size_t num_videos = 0;
  std::size_t num_shots = 0;
  std::size_t num_scenes = 0;
  double duration_mean = 0.0;
  double duration_std = 0.0;  // sample standard deviation
  double shot_length_mean = 0.0;
  std::vector<std::size_t> tag_frequencies;  // scenes carrying tag k, index k-1
};

CorpusStats corpus_stats(const Corpus& corpus);
nlohmann::ordered_json to_json(const CorpusStats& s);

}  // namespace scenestruct
