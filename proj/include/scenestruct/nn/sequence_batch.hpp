// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "scenestruct/error.hpp"
#include "scenestruct/nn/matrix.hpp"

namespace scenestruct::nn {

/// Variable-length sequences padded to a common length. Padded rows exist
/// only for layout; nothing downstream reads them.
template <typename T>
struct SequenceBatch {
  std::size_t padded_length = 0;
  std::size_t feature_dim = 0;
  std::vector<Matrix<T>> sequences;  // each padded_length × feature_dim
  std::vector<std::size_t> lengths;

  std::size_t size() const { return sequences.size(); }

  /// Per-sequence validity mask, 1 for real timesteps.
  std::vector<std::uint8_t> mask(std::size_t b) const {
    std::vector<std::uint8_t> m(padded_length, 0);
    std::fill(m.begin(), m.begin() + lengths[b], 1);
    return m;
  }

  static SequenceBatch pad(std::vector<Matrix<T>> items, T pad_value = T(0)) {
    SequenceBatch batch;
    for (const auto& it : items) batch.padded_length = std::max(batch.padded_length, it.rows());
    batch.feature_dim = items.empty() ? 0 : items.front().cols();
    for (auto& it : items) {
      if (it.cols() != batch.feature_dim) {
        throw DimensionError("SequenceBatch: items differ in feature dimension");
      }
      batch.lengths.push_back(it.rows());
      if (it.rows() == batch.padded_length) {
        batch.sequences.push_back(std::move(it));
        continue;
      }
      Matrix<T> padded(batch.padded_length, batch.feature_dim, pad_value);
      std::copy(it.values().begin(), it.values().end(), padded.values().begin());
      batch.sequences.push_back(std::move(padded));
    }
    return batch;
  }
};

}  // namespace scenestruct::nn
