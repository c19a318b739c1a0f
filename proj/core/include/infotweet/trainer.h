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

#ifndef INFOTWEET_TRAINER_H_
#define INFOTWEET_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "infotweet/corpus.h"
#include "infotweet/model.h"
#include "infotweet/preprocess.h"

namespace infotweet {

// Grid rates are tuned for large pretrained encoders; toy runs multiply them
// by this factor.
inline constexpr double kToyLrMultiplier = 200.0;

struct TrainConfig {
  std::size_t batch_size = 32;
  std::vector<double> learning_rates{1e-5, 2e-5, 5e-5};
  std::size_t epochs = 30;
  double weight_decay = 0.01;
  std::uint64_t seed = 0;
  std::size_t max_len = kDefaultMaxLen;
  // Applied to every grid rate by grid_search.
  double lr_scale = 1.0;

  // Throws Error(kValidation) naming the offending field.
  void validate() const;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  double dev_f1 = 0.0;

  bool operator==(const EpochRecord&) const = default;
};

struct LrRun {
  double lr = 0.0;
  std::vector<EpochRecord> history;
  std::size_t steps = 0;
  std::size_t best_epoch = 0;
  double best_dev_f1 = 0.0;
  // Parameters after best_epoch. The only snapshot kept for this rate.
  ModelParameters best_params;
};

struct TrainResult {
  EncoderSpec spec;
  std::vector<LrRun> runs;
  std::size_t best_run = 0;
  std::size_t best_epoch = 0;
  double best_lr = 0.0;
  double best_dev_f1 = 0.0;

  const ModelParameters& best_params() const {
    return runs[best_run].best_params;
  }
  ClassifierModel best_checkpoint() const { return {spec, best_params()}; }
};

struct Selection {
  std::size_t run = 0;
  std::size_t epoch = 0;

  bool operator==(const Selection&) const = default;
};

// Maximum dev F1 over all (lr, epoch) pairs; ties go to the earlier epoch,
// then to the smaller lr. Throws Error(kArgument) if every history is empty
// or the spans differ in length.
Selection select_best(std::span<const double> lrs,
                      std::span<const std::vector<EpochRecord>> histories);

// Permutation of [0, n) that depends only on (seed, epoch).
std::vector<std::size_t> epoch_permutation(std::size_t n, std::uint64_t seed,
                                           std::size_t epoch);

// "lr=<v> epoch=<k> loss=<x> dev_f1=<y>"
std::string format_epoch_log(double lr, const EpochRecord& record);

using EpochCallback = std::function<void(double lr, const EpochRecord&)>;

// Fine-tunes from `init` at a fixed rate for config.epochs epochs of
// ceil(|train| / batch_size) mean-BCE AdamW steps each, evaluating dev F1
// after every epoch.
//
// Throws Error(kArgument) for an empty or unlabeled split, a non-positive
// lr, or init.spec.max_len != config.max_len, and Error(kDiverged) naming
// the step when a loss is non-finite.
LrRun train_one(const TrainConfig& config, double lr,
                const DatasetSplit& train, const DatasetSplit& valid,
                const ClassifierModel& init,
                const EpochCallback& on_epoch = {});

// train_one for every config rate (times lr_scale), each from the same init,
// followed by select_best. Errors from a run are rethrown prefixed with its
// rate.
TrainResult grid_search(const TrainConfig& config, const DatasetSplit& train,
                        const DatasetSplit& valid, const ClassifierModel& init,
                        const EpochCallback& on_epoch = {});

// Dev F1 of `params` on `split` with the same prediction path the trainer
// uses for checkpoint selection.
double dev_f1(const Encoder& encoder, const ModelParameters& params,
              const DatasetSplit& split);

}  // namespace infotweet

#endif  // INFOTWEET_TRAINER_H_
