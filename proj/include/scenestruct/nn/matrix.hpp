// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "scenestruct/error.hpp"

namespace scenestruct::nn {

/// Dense row-major 2-D array. Holds every weight matrix and activation.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                           " does not match shape " + shape_string(rows, cols));
    }
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw DimensionError("ragged initializer for Matrix");
      std::copy(row.begin(), row.end(), m.row(r++).begin());
    }
    return m;
  }

  static Matrix row_vector(std::span<const T> values) {
    return Matrix(1, values.size(), std::vector<T>(values.begin(), values.end()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](T v) { return std::isfinite(v); });
  }

  /// First `n` rows as a new matrix.
  Matrix head_rows(std::size_t n) const {
    assert(n <= rows_);
    return Matrix(n, cols_, std::vector<T>(data_.begin(), data_.begin() + n * cols_));
  }

  template <typename U>
  Matrix<U> cast() const {
    return Matrix<U>(rows_, cols_, std::vector<U>(data_.begin(), data_.end()));
  }

  std::string shape() const { return shape_string(rows_, cols_); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  static std::string shape_string(std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + "x" + std::to_string(c) + ")";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// out += a * b
template <typename T>
void matmul_accumulate(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& out) {
  assert(a.cols() == b.rows() && out.rows() == a.rows() && out.cols() == b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    T* o = out.row(i).data();
    for (std::size_t p = 0; p < k; ++p) {
      const T av = a(i, p);
      if (av == T(0)) continue;
      const T* br = b.row(p).data();
      for (std::size_t j = 0; j < m; ++j) o[j] += av * br[j];
    }
  }
}

/// out += aᵀ * b
template <typename T>
void matmul_at_b_accumulate(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& out) {
  assert(a.rows() == b.rows() && out.rows() == a.cols() && out.cols() == b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const T* ar = a.row(r).data();
    const T* br = b.row(r).data();
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const T av = ar[i];
      if (av == T(0)) continue;
      T* o = out.row(i).data();
      for (std::size_t j = 0; j < b.cols(); ++j) o[j] += av * br[j];
    }
  }
}

/// out += a * bᵀ
template <typename T>
void matmul_a_bt_accumulate(const Matrix<T>& a, const Matrix<T>& b, Matrix<T>& out) {
  assert(a.cols() == b.cols() && out.rows() == a.rows() && out.cols() == b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const T* ar = a.row(i).data();
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const T* br = b.row(j).data();
      T acc = T(0);
      for (std::size_t p = 0; p < a.cols(); ++p) acc += ar[p] * br[p];
      out(i, j) += acc;
    }
  }
}

}  // namespace scenestruct::nn
