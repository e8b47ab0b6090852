// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scenestruct/data/corpus.hpp"
#include "scenestruct/nn/layers.hpp"
#include "scenestruct/nn/matrix.hpp"
#include "scenestruct/nn/ops.hpp"

namespace scenestruct {

/// Which modalities (and the shot-length scalar) enter the fused shot vector.
struct ModalityMask {
  std::array<bool, kNumModalities> enabled{};
  bool include_length = true;

  /// Every canonical modality plus length.
  static ModalityMask all();
  /// Comma-separated modality names; the token "length" enables the length scalar.
  /// Throws ConfigError on unknown tokens or an empty mask.
  static ModalityMask parse(std::string_view csv);

  bool any() const;
  bool has(std::string_view modality) const;
  std::string to_string() const;

  friend bool operator==(const ModalityMask&, const ModalityMask&) = default;
};

enum class EncoderMode { kFrozen, kTrainable };

/// Per-modality encoder choice. Trainable modalities pass through a
/// single tanh layer of width `encoded_dim`.
struct ModalityEncoderSpec {
  std::array<EncoderMode, kNumModalities> modes{};
  std::size_t encoded_dim = 32;

  bool trainable(std::size_t modality) const { return modes[modality] == EncoderMode::kTrainable; }
  friend bool operator==(const ModalityEncoderSpec&, const ModalityEncoderSpec&) = default;
};

struct FusionConfig {
  ModalityMask mask = ModalityMask::all();
  ModalityEncoderSpec encoders;
  double dropout_rate = 0.5;
  // Optional z-normalisation of the shot length; off means raw seconds.
  bool normalize_length = false;
  double length_mean = 0.0;
  double length_std = 1.0;

  friend bool operator==(const FusionConfig&, const FusionConfig&) = default;
};

nlohmann::ordered_json to_json(const ModalityMask& m);
nlohmann::ordered_json to_json(const ModalityEncoderSpec& e);
nlohmann::ordered_json to_json(const FusionConfig& c);
ModalityEncoderSpec encoder_spec_from_json(const nlohmann::ordered_json& j);
FusionConfig fusion_config_from_json(const nlohmann::ordered_json& j);

/// Placement of one component inside the fused vector.
struct FusedBlock {
  std::string name;  // modality name or "length"
  std::size_t offset = 0;
  std::size_t width = 0;
};

/// Assembles fused shot vectors: enabled modalities in canonical order
/// (optionally encoded), then the length scalar, then dropout.
template <typename T>
class ShotFusion {
 public:
  struct Trace {
    std::array<nn::Matrix<T>, kNumModalities> raw;      // trainable inputs only
    std::array<nn::Matrix<T>, kNumModalities> encoded;  // tanh outputs
    nn::Matrix<T> keep_scale;
  };

  ShotFusion() = default;
  /// `input_dims` gives the raw width of every enabled modality.
  ShotFusion(const FusionConfig& cfg, const std::map<std::string, std::size_t>& input_dims);

  void init(nn::Rng& rng);

  const FusionConfig& config() const { return cfg_; }
  FusionConfig& mutable_config() { return cfg_; }
  const std::map<std::string, std::size_t>& input_dims() const { return input_dims_; }
  std::size_t output_dim() const { return output_dim_; }
  const std::vector<FusedBlock>& layout() const { return layout_; }

  /// Fused matrix for shots [span.first, span.last], one row per shot.
  nn::Matrix<T> forward(const VideoRecord& video, ShotSpan span, nn::Mode mode, nn::Rng* rng,
                        Trace* trace = nullptr) const;
  nn::Matrix<T> forward(std::span<const ShotRecord> shots, nn::Mode mode, nn::Rng* rng,
                        Trace* trace = nullptr) const;

  /// Single-shot convenience form of forward().
  std::vector<T> fuse_shot(const ShotRecord& shot, nn::Mode mode, nn::Rng* rng) const;

  /// Accumulates encoder gradients from dL/d(fused).
  void backward(const Trace& trace, const nn::Matrix<T>& d_fused);

  void collect(nn::ParamList<T>& out);

 private:
  FusionConfig cfg_;
  std::map<std::string, std::size_t> input_dims_;
  std::array<std::optional<nn::Dense<T>>, kNumModalities> encoders_;
  std::vector<FusedBlock> layout_;
  std::array<std::size_t, kNumModalities> offsets_{};
  std::size_t output_dim_ = 0;
};

/// Enabled-modality input widths taken from a manifest. Throws ConfigError
/// when the mask enables a modality the manifest lacks.
std::map<std::string, std::size_t> fusion_input_dims(const ModalityMask& mask,
                                                     const CorpusManifest& manifest);

}  // namespace scenestruct
