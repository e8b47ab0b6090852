// Copyright 2026 The scenestruct Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace scenestruct {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitCheckpoint = 4;

/// Flags shared by every subcommand; unset fields fall back to the config file.
struct CommandOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mask;
  std::optional<std::string> net;
  std::optional<std::string> head;
  std::optional<std::string> mode;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> checkpoints;
  std::optional<std::filesystem::path> predictions;
  std::optional<int> epochs;
  std::optional<unsigned> threads;
};

void cmd_generate(const CommandOptions& o, std::ostream& out, std::ostream& err);
void cmd_train(const CommandOptions& o, std::ostream& out, std::ostream& err);
void cmd_predict(const CommandOptions& o, std::ostream& out, std::ostream& err);
void cmd_evaluate(const CommandOptions& o, std::ostream& out, std::ostream& err);
void cmd_ablate(const CommandOptions& o, std::ostream& out, std::ostream& err);

/// 2 config, 3 data/alignment, 4 checkpoint/mode, 1 anything else.
int exit_code_for(const std::exception& e);

/// Parses argv and runs one subcommand; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scenestruct
