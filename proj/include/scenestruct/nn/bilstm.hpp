// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "scenestruct/error.hpp"
#include "scenestruct/nn/layers.hpp"
#include "scenestruct/nn/matrix.hpp"
#include "scenestruct/nn/ops.hpp"

namespace scenestruct::nn {

// Gate blocks inside the 4H pre-activation vector.
inline constexpr std::size_t kGateInput = 0;
inline constexpr std::size_t kGateForget = 1;
inline constexpr std::size_t kGateCell = 2;
inline constexpr std::size_t kGateOutput = 3;

/// One direction of one LSTM layer.
///   z = x·W_in + h_prev·W_rec + b,  z = [i f g o]
///   c = σ(f)⊙c_prev + σ(i)⊙tanh(g),  h = σ(o)⊙tanh(c)
template <typename T>
class LstmDirection {
 public:
  struct Trace {
    Matrix<T> gates;      // post-activation [i f g o], indexed by time
    Matrix<T> cell;       // c_t
    Matrix<T> cell_tanh;  // tanh(c_t)
    Matrix<T> hidden;     // h_t
    bool reverse = false;
  };

  LstmDirection() = default;
  LstmDirection(const std::string& name, std::size_t in, std::size_t hidden)
      : hidden_(hidden),
        w_in_(name + ".w_in", in, 4 * hidden),
        w_rec_(name + ".w_rec", hidden, 4 * hidden),
        bias_(name + ".bias", 1, 4 * hidden) {}

  void init(Rng& rng, double forget_bias) {
    const double bound = 1.0 / std::sqrt(double(hidden_));
    init_uniform(w_in_.value, bound, rng);
    init_uniform(w_rec_.value, bound, rng);
    init_uniform(bias_.value, bound, rng);
    for (std::size_t k = 0; k < hidden_; ++k) {
      bias_.value(0, kGateForget * hidden_ + k) = static_cast<T>(forget_bias);
    }
  }

  std::size_t hidden_dim() const { return hidden_; }
  std::size_t input_dim() const { return w_in_.value.rows(); }

  /// Runs over all rows of `x`; returns hidden states in time order.
  const Matrix<T>& forward(const Matrix<T>& x, bool reverse, Trace& tr) const {
    const std::size_t len = x.rows(), h = hidden_;
    Matrix<T> z = dense_forward(x, w_in_.value, bias_.value.row(0));
    tr.gates = Matrix<T>(len, 4 * h);
    tr.cell = Matrix<T>(len, h);
    tr.cell_tanh = Matrix<T>(len, h);
    tr.hidden = Matrix<T>(len, h);
    tr.reverse = reverse;

    for (std::size_t s = 0; s < len; ++s) {
      const std::size_t t = reverse ? len - 1 - s : s;
      auto zt = z.row(t);
      if (s > 0) {
        const std::size_t prev = reverse ? t + 1 : t - 1;
        auto hp = tr.hidden.row(prev);
        for (std::size_t p = 0; p < h; ++p) {
          const T hv = hp[p];
          const T* wr = w_rec_.value.row(p).data();
          for (std::size_t q = 0; q < 4 * h; ++q) zt[q] += hv * wr[q];
        }
      }
      auto g = tr.gates.row(t);
      auto c = tr.cell.row(t);
      auto ct = tr.cell_tanh.row(t);
      auto ht = tr.hidden.row(t);
      for (std::size_t k = 0; k < h; ++k) {
        const T ig = sigmoid(zt[kGateInput * h + k]);
        const T fg = sigmoid(zt[kGateForget * h + k]);
        const T gg = std::tanh(zt[kGateCell * h + k]);
        const T og = sigmoid(zt[kGateOutput * h + k]);
        g[kGateInput * h + k] = ig;
        g[kGateForget * h + k] = fg;
        g[kGateCell * h + k] = gg;
        g[kGateOutput * h + k] = og;
        T cprev = T(0);
        if (s > 0) cprev = tr.cell(reverse ? t + 1 : t - 1, k);
        c[k] = fg * cprev + ig * gg;
        ct[k] = std::tanh(c[k]);
        ht[k] = og * ct[k];
      }
    }
    return tr.hidden;
  }

  /// Backpropagation through time. `dh` is dL/dh_t from above, in time order.
  Matrix<T> backward(const Matrix<T>& x, const Trace& tr, const Matrix<T>& dh) {
    const std::size_t len = x.rows(), h = hidden_;
    const bool reverse = tr.reverse;
    Matrix<T> dz(len, 4 * h);
    Matrix<T> h_prev(len, h);
    std::vector<T> dh_next(h, T(0)), dc_next(h, T(0));

    for (std::size_t s = len; s-- > 0;) {
      const std::size_t t = reverse ? len - 1 - s : s;
      const bool has_prev = s > 0;
      const std::size_t prev = reverse ? t + 1 : t - 1;
      auto g = tr.gates.row(t);
      auto ct = tr.cell_tanh.row(t);
      auto dzt = dz.row(t);
      for (std::size_t k = 0; k < h; ++k) {
        const T ig = g[kGateInput * h + k];
        const T fg = g[kGateForget * h + k];
        const T gg = g[kGateCell * h + k];
        const T og = g[kGateOutput * h + k];
        const T cprev = has_prev ? tr.cell(prev, k) : T(0);
        const T dht = dh(t, k) + dh_next[k];
        const T dct = dc_next[k] + dht * og * (T(1) - ct[k] * ct[k]);
        dzt[kGateInput * h + k] = dct * gg * ig * (T(1) - ig);
        dzt[kGateForget * h + k] = dct * cprev * fg * (T(1) - fg);
        dzt[kGateCell * h + k] = dct * ig * (T(1) - gg * gg);
        dzt[kGateOutput * h + k] = dht * ct[k] * og * (T(1) - og);
        dc_next[k] = dct * fg;
      }
      if (has_prev) {
        auto hp = tr.hidden.row(prev);
        std::copy(hp.begin(), hp.end(), h_prev.row(t).begin());
      }
      for (std::size_t p = 0; p < h; ++p) {
        const T* wr = w_rec_.value.row(p).data();
        T acc = T(0);
        for (std::size_t q = 0; q < 4 * h; ++q) acc += dzt[q] * wr[q];
        dh_next[p] = acc;
      }
    }

    matmul_at_b_accumulate(x, dz, w_in_.grad);
    matmul_at_b_accumulate(h_prev, dz, w_rec_.grad);
    auto db = bias_.grad.row(0);
    for (std::size_t t = 0; t < len; ++t) {
      auto row = dz.row(t);
      for (std::size_t q = 0; q < row.size(); ++q) db[q] += row[q];
    }
    Matrix<T> dx(len, x.cols());
    matmul_a_bt_accumulate(dz, w_in_.value, dx);
    return dx;
  }

  Param<T>& w_in() { return w_in_; }
  Param<T>& w_rec() { return w_rec_; }
  Param<T>& bias() { return bias_; }

  void collect(ParamList<T>& out) {
    out.push_back(&w_in_);
    out.push_back(&w_rec_);
    out.push_back(&bias_);
  }

 private:
  std::size_t hidden_ = 0;
  Param<T> w_in_;
  Param<T> w_rec_;
  Param<T> bias_;
};

struct BiLstmConfig {
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 128;
  double forget_bias = 1.0;
};

/// Two stacked bi-directional LSTM layers. Output at each timestep is
/// [h_forward ; h_backward] of the second layer, width 2·hidden_dim.
template <typename T>
class BiLstm {
 public:
  static constexpr std::size_t kNumLayers = 2;

  struct Trace {
    std::array<Matrix<T>, kNumLayers> layer_input;
    std::array<std::array<typename LstmDirection<T>::Trace, 2>, kNumLayers> dirs;
  };

  BiLstm() = default;
  BiLstm(const std::string& name, const BiLstmConfig& cfg) : cfg_(cfg) {
    for (std::size_t l = 0; l < kNumLayers; ++l) {
      const std::size_t in = l == 0 ? cfg.input_dim : 2 * cfg.hidden_dim;
      const std::string prefix = name + ".l" + std::to_string(l);
      layers_[l][0] = LstmDirection<T>(prefix + ".fwd", in, cfg.hidden_dim);
      layers_[l][1] = LstmDirection<T>(prefix + ".bwd", in, cfg.hidden_dim);
    }
  }

  void init(Rng& rng) {
    for (auto& layer : layers_)
      for (auto& dir : layer) dir.init(rng, cfg_.forget_bias);
  }

  const BiLstmConfig& config() const { return cfg_; }
  std::size_t output_dim() const { return 2 * cfg_.hidden_dim; }

  /// Encodes the first `length` rows of `x`; rows past `length` are never read.
  Matrix<T> forward(const Matrix<T>& x, std::size_t length, Trace& tr) const {
    if (length == 0) throw EmptySequenceError("bilstm_forward: sequence has zero valid length");
    if (x.cols() != cfg_.input_dim) {
      throw DimensionError("bilstm_forward: input feature dim " + std::to_string(x.cols()) +
                           " but the network expects " + std::to_string(cfg_.input_dim));
    }
    if (length > x.rows()) throw DimensionError("bilstm_forward: valid length exceeds rows");
    const std::size_t h = cfg_.hidden_dim;
    tr.layer_input[0] = length == x.rows() ? x : x.head_rows(length);
    Matrix<T> out;
    for (std::size_t l = 0; l < kNumLayers; ++l) {
      const auto& fwd = layers_[l][0].forward(tr.layer_input[l], false, tr.dirs[l][0]);
      const auto& bwd = layers_[l][1].forward(tr.layer_input[l], true, tr.dirs[l][1]);
      out = Matrix<T>(length, 2 * h);
      for (std::size_t t = 0; t < length; ++t) {
        auto o = out.row(t);
        std::copy(fwd.row(t).begin(), fwd.row(t).end(), o.begin());
        std::copy(bwd.row(t).begin(), bwd.row(t).end(), o.begin() + h);
      }
      if (l + 1 < kNumLayers) tr.layer_input[l + 1] = out;
    }
    return out;
  }

  Matrix<T> forward(const Matrix<T>& x) const {
    Trace tr;
    return forward(x, x.rows(), tr);
  }

  /// Returns dL/dx for the valid rows, given dL/d(output).
  Matrix<T> backward(const Trace& tr, const Matrix<T>& d_out) {
    const std::size_t h = cfg_.hidden_dim;
    Matrix<T> d = d_out;
    for (std::size_t l = kNumLayers; l-- > 0;) {
      const std::size_t len = d.rows();
      Matrix<T> dh_f(len, h), dh_b(len, h);
      for (std::size_t t = 0; t < len; ++t) {
        auto row = d.row(t);
        std::copy(row.begin(), row.begin() + h, dh_f.row(t).begin());
        std::copy(row.begin() + h, row.end(), dh_b.row(t).begin());
      }
      Matrix<T> dx = layers_[l][0].backward(tr.layer_input[l], tr.dirs[l][0], dh_f);
      Matrix<T> dxb = layers_[l][1].backward(tr.layer_input[l], tr.dirs[l][1], dh_b);
      auto a = dx.values();
      auto b = dxb.values();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      d = std::move(dx);
    }
    return d;
  }

  LstmDirection<T>& direction(std::size_t layer, bool backward) {
    return layers_[layer][backward ? 1 : 0];
  }

  void collect(ParamList<T>& out) {
    for (auto& layer : layers_)
      for (auto& dir : layer) dir.collect(out);
  }

 private:
  BiLstmConfig cfg_;
  std::array<std::array<LstmDirection<T>, 2>, kNumLayers> layers_;
};

}  // namespace scenestruct::nn
