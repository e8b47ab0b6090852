// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "scenestruct/error.hpp"
#include "scenestruct/nn/layers.hpp"

namespace scenestruct::nn {

inline constexpr std::string_view kCheckpointFormat = "scenestruct-ckpt-v1";

/// Shapes and flat values of every parameter block, in collection order.
template <typename T>
nlohmann::ordered_json params_to_json(const ParamList<T>& params) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto* p : params) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (T v : p->value.values()) values.push_back(static_cast<double>(v));
    arr.push_back({{"name", p->name},
                   {"rows", p->value.rows()},
                   {"cols", p->value.cols()},
                   {"values", std::move(values)}});
  }
  return arr;
}

template <typename T, typename Json>
void params_from_json(const Json& arr, const ParamList<T>& params) {
  if (!arr.is_array() || arr.size() != params.size()) {
    throw CheckpointError("checkpoint holds " + std::to_string(arr.is_array() ? arr.size() : 0) +
                          " parameter blocks, model expects " + std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& e = arr[i];
    auto* p = params[i];
    const auto name = e.at("name").template get<std::string>();
    const auto rows = e.at("rows").template get<std::size_t>();
    const auto cols = e.at("cols").template get<std::size_t>();
    if (name != p->name || rows != p->value.rows() || cols != p->value.cols()) {
      throw CheckpointError("checkpoint block '" + name + "' " + Matrix<T>::shape_string(rows, cols) +
                            " does not match model block '" + p->name + "' " + p->value.shape());
    }
    const auto& values = e.at("values");
    if (values.size() != p->value.size()) {
      throw CheckpointError("checkpoint block '" + name + "' has wrong value count");
    }
    auto w = p->value.values();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = static_cast<T>(values[k].template get<double>());
    p->zero_grad();
  }
}

}  // namespace scenestruct::nn
