// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace scenestruct {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or hyperparameters (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class DataErrorKind {
  kParse,
  kDimensionMismatch,
  kMissingModality,
  kNonContiguousShots,
  kInvalidShot,
  kOverlappingScenes,
  kInvalidScene,
  kUnknownTag,
  kUnknownVideo,
  kMissingGroundTruth,
  kTooSmall,
};

/// Corpus or prediction data that violates the schema (CLI exit code 3).
class DataError : public Error {
 public:
  DataError(DataErrorKind kind, std::string video_id, const std::string& message)
      : Error(video_id.empty() ? message : "video '" + video_id + "': " + message),
        kind_(kind),
        video_id_(std::move(video_id)) {}

  DataErrorKind kind() const { return kind_; }
  const std::string& video_id() const { return video_id_; }

 private:
  DataErrorKind kind_;
  std::string video_id_;
};

/// A segment that does not land on shot boundaries (CLI exit code 3).
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Missing, malformed, or mismatched checkpoint (CLI exit code 4).
class CheckpointError : public Error {
 public:
  using Error::Error;
};

/// Head mode of a SegmentNet does not match the requested use.
class ModeError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class EmptySequenceError : public Error {
 public:
  using Error::Error;
};

class EmptyLossError : public Error {
 public:
  using Error::Error;
};

class TrainingDivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace scenestruct
