// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "scenestruct/nn/matrix.hpp"
#include "scenestruct/nn/ops.hpp"

namespace scenestruct::nn {

/// A trainable block: value plus its accumulated gradient.
template <typename T>
struct Param {
  std::string name;
  Matrix<T> value;
  Matrix<T> grad;

  Param() = default;
  Param(std::string n, std::size_t rows, std::size_t cols)
      : name(std::move(n)), value(rows, cols), grad(rows, cols) {}

  void zero_grad() { grad.fill(T(0)); }
};

template <typename T>
using ParamList = std::vector<Param<T>*>;

template <typename T>
void zero_grads(const ParamList<T>& params) {
  for (auto* p : params) p->zero_grad();
}

template <typename T>
void init_uniform(Matrix<T>& m, double bound, Rng& rng) {
  std::uniform_real_distribution<double> unif(-bound, bound);
  for (auto& v : m.values()) v = static_cast<T>(unif(rng));
}

/// Fully-connected layer y = x·W + b. W is (in × out), b is (1 × out).
template <typename T>
class Dense {
 public:
  Dense() = default;
  Dense(const std::string& name, std::size_t in, std::size_t out)
      : weight_(name + ".weight", in, out), bias_(name + ".bias", 1, out) {}

  void init(Rng& rng) {
    const double bound = weight_.value.rows() ? 1.0 / std::sqrt(double(weight_.value.rows())) : 0.0;
    init_uniform(weight_.value, bound, rng);
    bias_.value.fill(T(0));
  }

  std::size_t in_dim() const { return weight_.value.rows(); }
  std::size_t out_dim() const { return weight_.value.cols(); }

  Matrix<T> forward(const Matrix<T>& x) const {
    return dense_forward(x, weight_.value, bias_.value.row(0));
  }

  /// Accumulates parameter gradients and returns dL/dx.
  Matrix<T> backward(const Matrix<T>& x, const Matrix<T>& dy) {
    matmul_at_b_accumulate(x, dy, weight_.grad);
    auto db = bias_.grad.row(0);
    for (std::size_t r = 0; r < dy.rows(); ++r) {
      auto row = dy.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) db[c] += row[c];
    }
    Matrix<T> dx(x.rows(), x.cols());
    matmul_a_bt_accumulate(dy, weight_.value, dx);
    return dx;
  }

  Param<T>& weight() { return weight_; }
  Param<T>& bias() { return bias_; }
  const Param<T>& weight() const { return weight_; }
  const Param<T>& bias() const { return bias_; }

  void collect(ParamList<T>& out) {
    out.push_back(&weight_);
    out.push_back(&bias_);
  }

 private:
  Param<T> weight_;
  Param<T> bias_;
};

}  // namespace scenestruct::nn
