// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "scenestruct/nn/layers.hpp"

namespace scenestruct::nn {

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  std::size_t checked = 0;
};

// Gradients smaller than this are compared on an absolute scale; below it
// the central difference is dominated by rounding.
inline constexpr double kGradCheckFloor = 1e-5;

/// Central-difference gradient verification.
///
/// `loss` evaluates the scalar objective at the current parameter values and
/// must be deterministic (re-seed any dropout generator inside it).
/// `compute_grads` zeroes and fills the analytic gradients.
/// Relative error is |a - n| / max(|a|, |n|, kGradCheckFloor).
inline GradCheckResult grad_check(const ParamList<double>& params,
                                  const std::function<double()>& loss,
                                  const std::function<void()>& compute_grads, double eps = 1e-6) {
  compute_grads();
  GradCheckResult res;
  for (auto* p : params) {
    auto w = p->value.values();
    auto g = p->grad.values();
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double saved = w[k];
      w[k] = saved + eps;
      const double up = loss();
      w[k] = saved - eps;
      const double down = loss();
      w[k] = saved;
      const double numeric = (up - down) / (2.0 * eps);
      const double analytic = g[k];
      const double denom = std::max({std::abs(analytic), std::abs(numeric), kGradCheckFloor});
      const double rel = std::abs(analytic - numeric) / denom;
      ++res.checked;
      if (rel > res.max_rel_error || res.worst_param.empty()) {
        if (rel >= res.max_rel_error) {
          res.max_rel_error = rel;
          res.worst_param = p->name;
          res.worst_index = k;
          res.analytic = analytic;
          res.numeric = numeric;
        }
      }
    }
  }
  return res;
}

}  // namespace scenestruct::nn
