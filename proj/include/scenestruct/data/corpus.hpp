// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace scenestruct {

/// Canonical modality order; fused shot vectors follow it, then shot length.
inline constexpr std::array<std::string_view, 5> kModalityNames = {"vis_r50", "vis_i3", "image",
                                                                   "audio", "text"};
inline constexpr std::size_t kNumModalities = kModalityNames.size();

std::optional<std::size_t> modality_index(std::string_view name);

/// Shots must join within this many seconds.
inline constexpr double kContiguityTolerance = 1e-3;

/// Half-open time interval in seconds.
struct SegmentSpan {
  double start_s = 0.0;
  double end_s = 0.0;

  double length() const { return end_s - start_s; }
  friend bool operator==(const SegmentSpan&, const SegmentSpan&) = default;
};

/// Inclusive shot-index pair, zero-based.
struct ShotSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  friend bool operator==(const ShotSpan&, const ShotSpan&) = default;
};

struct ShotRecord {
  double start_s = 0.0;
  double end_s = 0.0;
  std::map<std::string, std::vector<double>> features;

  double length_s() const { return end_s - start_s; }
  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

struct SceneAnnotation {
  SegmentSpan span;
  std::vector<int> tags;  // ids in [1, K], ascending, unique

  friend bool operator==(const SceneAnnotation&, const SceneAnnotation&) = default;
};

struct VideoRecord {
  std::string video_id;
  double duration_s = 0.0;
  std::vector<ShotRecord> shots;
  std::optional<std::vector<SceneAnnotation>> scenes;

  std::size_t num_shots() const { return shots.size(); }
  bool has_scenes() const { return scenes.has_value(); }
  friend bool operator==(const VideoRecord&, const VideoRecord&) = default;
};

struct TagVocabulary {
  int num_tags = 0;
  std::map<int, std::string> names;  // optional display names

  std::string name(int id) const;
  friend bool operator==(const TagVocabulary&, const TagVocabulary&) = default;
};

struct CorpusManifest {
  std::map<std::string, std::size_t> modality_dims;
  TagVocabulary tags;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();

  int num_tags() const { return tags.num_tags; }
  std::size_t dim(std::string_view modality) const;
  bool has_modality(std::string_view modality) const;
  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

struct Corpus {
  CorpusManifest manifest;
  std::vector<VideoRecord> videos;

  const VideoRecord* find(std::string_view video_id) const;
  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Standard file names inside a corpus directory.
inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kRecordsFile = "videos.jsonl";

/// Loads and eagerly validates a corpus. Throws DataError naming the video.
Corpus load_corpus(const std::filesystem::path& manifest_path,
                   const std::filesystem::path& records_path);
Corpus load_corpus_dir(const std::filesystem::path& dir);

CorpusManifest parse_manifest(const nlohmann::ordered_json& j);
VideoRecord parse_video(const nlohmann::json& j);
nlohmann::ordered_json manifest_to_json(const CorpusManifest& m);
nlohmann::ordered_json video_to_json(const VideoRecord& v);

/// Validates one record against the manifest.
void validate_video(const VideoRecord& video, const CorpusManifest& manifest);

void write_corpus(const Corpus& corpus, const std::filesystem::path& manifest_path,
                  const std::filesystem::path& records_path);
void write_corpus_dir(const Corpus& corpus, const std::filesystem::path& dir);

/// Corpus restricted to the given video ids, in the given order.
Corpus subset(const Corpus& corpus, const std::vector<std::string>& video_ids);

}  // namespace scenestruct
