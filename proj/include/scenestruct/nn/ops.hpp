// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "scenestruct/error.hpp"
#include "scenestruct/nn/matrix.hpp"

namespace scenestruct::nn {

using Rng = std::mt19937_64;

enum class Mode { kTrain, kEval };

/// Numerically stable logistic function; never evaluates exp of a positive argument.
template <typename T>
T sigmoid(T x) {
  if (x >= T(0)) return T(1) / (T(1) + std::exp(-x));
  const T e = std::exp(x);
  return e / (T(1) + e);
}

/// y = x·W + b with b broadcast over rows.
template <typename T>
Matrix<T> dense_forward(const Matrix<T>& x, const Matrix<T>& weights, std::span<const T> bias) {
  if (x.cols() != weights.rows()) {
    throw DimensionError("dense_forward: input " + x.shape() + " incompatible with weights " +
                         weights.shape());
  }
  if (bias.size() != weights.cols()) {
    throw DimensionError("dense_forward: bias length " + std::to_string(bias.size()) +
                         " incompatible with weights " + weights.shape());
  }
  Matrix<T> y(x.rows(), weights.cols());
  for (std::size_t r = 0; r < y.rows(); ++r) {
    auto out = y.row(r);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = bias[c];
  }
  matmul_accumulate(x, weights, y);
  return y;
}

template <typename T>
struct BceResult {
  T loss = T(0);        // mean over unmasked elements
  std::size_t count = 0;
  std::vector<T> dlogits;  // d(mean loss)/d(logit), zero where masked
};

inline constexpr double kBceClamp = 1e-7;

/// Binary cross-entropy on probabilities with the gradient taken w.r.t. the
/// pre-sigmoid logits. `mask` may be empty (all elements count). Positive
/// targets are weighted by `pos_weight`.
template <typename T>
BceResult<T> bce_loss(std::span<const T> probs, std::span<const T> targets,
                      std::span<const std::uint8_t> mask = {}, T pos_weight = T(1)) {
  if (probs.size() != targets.size() || (!mask.empty() && mask.size() != probs.size())) {
    throw DimensionError("bce_loss: prediction, target and mask lengths differ (" +
                         std::to_string(probs.size()) + ", " + std::to_string(targets.size()) +
                         ", " + std::to_string(mask.size()) + ")");
  }
  BceResult<T> out;
  out.dlogits.assign(probs.size(), T(0));
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (mask.empty() || mask[i]) ++out.count;
  }
  if (out.count == 0) throw EmptyLossError("bce_loss: every element is masked");

  const T lo = T(kBceClamp), hi = T(1) - T(kBceClamp);
  double total = 0.0;
  const T inv = T(1) / static_cast<T>(out.count);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!mask.empty() && !mask[i]) continue;
    const T p = probs[i], t = targets[i];
    const T pc = std::clamp(p, lo, hi);
    total += -(static_cast<double>(pos_weight * t) * std::log(static_cast<double>(pc)) +
               static_cast<double>(T(1) - t) * std::log(1.0 - static_cast<double>(pc)));
    out.dlogits[i] = (p * (pos_weight * t + T(1) - t) - pos_weight * t) * inv;
  }
  out.loss = static_cast<T>(total / static_cast<double>(out.count));
  return out;
}

/// Inverted dropout. In train mode each element is zeroed with probability
/// `rate` and survivors are scaled by 1/(1-rate); eval mode is the identity.
/// When `keep_scale` is given it receives the per-element multiplier.
template <typename T>
Matrix<T> dropout(const Matrix<T>& x, double rate, Mode mode, Rng* rng,
                  Matrix<T>* keep_scale = nullptr) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ConfigError("dropout rate must lie in [0, 1), got " + std::to_string(rate));
  }
  if (mode == Mode::kEval || rate == 0.0) {
    if (keep_scale) *keep_scale = Matrix<T>(x.rows(), x.cols(), T(1));
    return x;
  }
  if (rng == nullptr) throw ConfigError("dropout in train mode requires a random generator");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const T scale = static_cast<T>(1.0 / (1.0 - rate));
  Matrix<T> y(x.rows(), x.cols());
  Matrix<T> s(x.rows(), x.cols());
  auto xs = x.values();
  auto ys = y.values();
  auto ss = s.values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ss[i] = unif(*rng) < rate ? T(0) : scale;
    ys[i] = xs[i] * ss[i];
  }
  if (keep_scale) *keep_scale = std::move(s);
  return y;
}

}  // namespace scenestruct::nn
