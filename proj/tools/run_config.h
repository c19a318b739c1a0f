// Copyright 2026 The infotweet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFOTWEET_TOOLS_RUN_CONFIG_H_
#define INFOTWEET_TOOLS_RUN_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "infotweet/encoder.h"
#include "infotweet/trainer.h"

namespace infotweet::cli {

// Training run configuration, read from a flat "key = value" file. Blank
// lines and lines starting with '#' are ignored. Relative paths resolve
// against the directory holding the file.
//
//   train              path to the labeled training split (required)
//   valid              path to the labeled validation split (required)
//   test               optional split to label with the selected checkpoint
//   output_dir         directory for checkpoints, manifest and log (required)
//   encoder            registry name, default "toy"
//   hidden_dim         default 32
//   max_len            default 128
//   vocab_size         toy encoder hashed vocabulary, default 4096
//   normalize          true/false, default true
//   batch_size         default 32
//   learning_rates     comma-separated, default 1e-5,2e-5,5e-5
//   epochs             default 30
//   weight_decay       default 0.01
//   seed               default 0
//   toy_lr_multiplier  grid multiplier for the toy encoder, default 200
struct RunConfig {
  std::filesystem::path train;
  std::filesystem::path valid;
  std::optional<std::filesystem::path> test;
  std::filesystem::path output_dir;
  EncoderSpec encoder;
  TrainConfig training;
  double toy_lr_multiplier = kToyLrMultiplier;

  // Grid multiplier that applies to this run's encoder.
  double effective_lr_scale() const;
};

// Throws Error(kValidation) listing unknown keys, malformed values, missing
// required keys, invalid training settings, or input paths that do not
// exist.
RunConfig parse_run_config(std::string_view text,
                           const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

// Inverse of parse_run_config for the keys above; paths written as given.
std::string format_run_config(const RunConfig& config);

}  // namespace infotweet::cli

#endif  // INFOTWEET_TOOLS_RUN_CONFIG_H_
