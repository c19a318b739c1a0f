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

#ifndef INFOTWEET_TOOLS_CLI_H_
#define INFOTWEET_TOOLS_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "infotweet/corpus.h"
#include "infotweet/ensemble.h"
#include "infotweet/metrics.h"
#include "infotweet/trainer.h"

namespace infotweet::cli {

// Prints label counts of a split. With `check`, also compares them against
// the official counts of that split and throws Error(kValidation) on any
// difference.
CorpusStats cmd_stats(const std::filesystem::path& split_path,
                      std::optional<SplitName> check, std::ostream& out);

// Output layout under output_dir:
//   train.log                  one line per (lr, epoch)
//   lr_<v>/checkpoint.bin      best epoch for that rate
//   lr_<v>/manifest.json
//   best/checkpoint.bin        globally selected checkpoint
//   best/manifest.json         best_lr, best_epoch, dev_f1, ...
//   best/test_predictions.tsv  and test_probabilities.tsv, when test is set
TrainResult cmd_train(const std::filesystem::path& config_path,
                      std::ostream& out);

// Labels every record of `input` with the checkpoint; optionally also writes
// the per-model probability file read by cmd_ensemble.
void cmd_predict(const std::filesystem::path& checkpoint,
                 const std::filesystem::path& input,
                 const std::filesystem::path& output,
                 const std::optional<std::filesystem::path>& probabilities);

void cmd_ensemble(std::span<const std::filesystem::path> probability_files,
                  Scheme scheme, const std::filesystem::path& output);

// Joins predictions to gold labels by id. Throws Error(kJoin) when a gold id
// has no prediction, a prediction id is not in gold, or an id repeats.
EvaluationReport cmd_evaluate(const std::filesystem::path& gold,
                              const std::filesystem::path& predictions,
                              bool json, std::ostream& out);

// Writes a synthetic separable train/valid pair and a toy training config
// pointing at them.
void cmd_synth(const std::filesystem::path& dir, std::size_t train_size,
               std::size_t valid_size, std::uint64_t seed, std::ostream& out);

// Entry point shared by main() and the tests. Returns the process exit code:
// 0 on success, 1 on a reported error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace infotweet::cli

#endif  // INFOTWEET_TOOLS_CLI_H_
