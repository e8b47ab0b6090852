// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "scenestruct/error.hpp"
#include "scenestruct/nn/layers.hpp"

namespace scenestruct::nn {

struct AdamConfig {
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias correction. Moment buffers are created lazily on the
/// first step and must keep the same parameter order afterwards.
template <typename T>
class Adam {
 public:
  explicit Adam(AdamConfig cfg = {}) : cfg_(cfg) {}

  const AdamConfig& config() const { return cfg_; }
  std::uint64_t step_count() const { return t_; }
  const std::vector<Matrix<T>>& first_moment() const { return m_; }
  const std::vector<Matrix<T>>& second_moment() const { return v_; }

  void step(const ParamList<T>& params) {
    if (m_.empty()) {
      for (auto* p : params) {
        m_.emplace_back(p->value.rows(), p->value.cols());
        v_.emplace_back(p->value.rows(), p->value.cols());
      }
    }
    if (m_.size() != params.size()) {
      throw DimensionError("adam_step: parameter list changed between steps");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      const auto* p = params[i];
      if (p->grad.rows() != m_[i].rows() || p->grad.cols() != m_[i].cols() ||
          p->value.size() != p->grad.size()) {
        throw DimensionError("adam_step: shape mismatch for parameter block '" + p->name + "'");
      }
      if (!p->grad.all_finite()) {
        throw TrainingDivergenceError("adam_step: non-finite gradient in parameter block '" +
                                      p->name + "'");
      }
    }

    ++t_;
    const double b1 = cfg_.beta1, b2 = cfg_.beta2;
    const double c1 = 1.0 - std::pow(b1, double(t_));
    const double c2 = 1.0 - std::pow(b2, double(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto w = params[i]->value.values();
      auto g = params[i]->grad.values();
      auto m = m_[i].values();
      auto v = v_[i].values();
      for (std::size_t k = 0; k < w.size(); ++k) {
        const double gk = g[k];
        m[k] = static_cast<T>(b1 * m[k] + (1.0 - b1) * gk);
        v[k] = static_cast<T>(b2 * v[k] + (1.0 - b2) * gk * gk);
        const double m_hat = m[k] / c1;
        const double v_hat = v[k] / c2;
        w[k] = static_cast<T>(w[k] - cfg_.lr * m_hat / (std::sqrt(v_hat) + cfg_.epsilon));
      }
    }
  }

 private:
  AdamConfig cfg_;
  std::uint64_t t_ = 0;
  std::vector<Matrix<T>> m_;
  std::vector<Matrix<T>> v_;
};

}  // namespace scenestruct::nn
