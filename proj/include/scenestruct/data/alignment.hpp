// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scenestruct/data/corpus.hpp"

namespace scenestruct {

/// Default distance, in seconds, within which a shot boundary counts as a scene boundary.
inline constexpr double kBoundaryToleranceS = 0.5;

/// Time span covered by shots [first, last]. Throws AlignmentError when out of range.
SegmentSpan span_from_shots(const VideoRecord& video, ShotSpan shots);

/// Shot indices whose start and end boundaries are nearest to the span's
/// endpoints (earlier shot on ties); last >= first always holds.
ShotSpan nearest_shot_span(const VideoRecord& video, const SegmentSpan& span);

/// Like nearest_shot_span but requires both endpoints to sit on a shot
/// boundary within `tol_s`; throws AlignmentError otherwise.
ShotSpan aligned_shot_span(const VideoRecord& video, const SegmentSpan& span,
                           double tol_s = kContiguityTolerance);

/// Times of the M-1 joins between consecutive shots.
std::vector<double> shot_boundary_times(const VideoRecord& video);

/// Interior scene boundaries implied by a list of segments: every segment
/// start and end, sorted and de-duplicated, excluding the video start and end.
std::vector<double> interior_boundaries(std::span<const SegmentSpan> segments, double video_start,
                                        double video_end);
std::vector<double> interior_boundaries(const VideoRecord& video,
                                        std::span<const SegmentSpan> segments);

/// Binary target per shot boundary (length M-1). Each interior ground-truth
/// boundary marks the nearest shot boundary closer than `tol_s`; the earlier
/// one wins ties.
std::vector<std::uint8_t> boundary_labels(const VideoRecord& video,
                                          std::span<const SceneAnnotation> scenes,
                                          double tol_s = kBoundaryToleranceS);

std::vector<SegmentSpan> scene_spans(std::span<const SceneAnnotation> scenes);

}  // namespace scenestruct
