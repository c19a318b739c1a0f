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

#include "infotweet/trainer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "infotweet/encoder.h"
#include "infotweet/error.h"
#include "infotweet/metrics.h"
#include "infotweet/optimizer.h"

namespace infotweet {
namespace {

std::vector<TokenSequence> prepare_split(const Encoder& encoder,
                                         const DatasetSplit& split) {
  std::vector<TokenSequence> seqs;
  seqs.reserve(split.size());
  for (const auto& r : split.records) {
    seqs.push_back(prepare_text(encoder, r.text));
  }
  return seqs;
}

double f1_on(const Encoder& encoder, const ModelParameters& params,
             std::span<const TokenSequence> seqs, std::span<const Label> gold) {
  std::vector<Label> pred;
  pred.reserve(seqs.size());
  for (const auto& seq : seqs) {
    pred.push_back(decide(predict_probability(encoder, params, seq)));
  }
  return evaluate(gold, pred).f1;
}

void scale(ModelParameters& grads, double factor) {
  for (std::span<double> view : flat_views(grads)) {
    for (double& g : view) g *= factor;
  }
}

void require_usable(const DatasetSplit& split, std::string_view what) {
  if (split.empty()) {
    throw Error(ErrorCode::kArgument, std::string(what) + " split is empty");
  }
  if (!split.fully_labeled()) {
    throw Error(ErrorCode::kArgument,
                std::string(what) + " split has unlabeled records");
  }
}

std::string format_lr(double lr) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", lr);
  return buf;
}

}  // namespace

void TrainConfig::validate() const {
  if (batch_size < 1) {
    throw Error(ErrorCode::kValidation, "batch_size must be at least 1");
  }
  if (epochs < 1) {
    throw Error(ErrorCode::kValidation, "epochs must be at least 1");
  }
  if (learning_rates.empty()) {
    throw Error(ErrorCode::kValidation, "learning_rates must not be empty");
  }
  for (double lr : learning_rates) {
    if (!(lr > 0.0) || !std::isfinite(lr)) {
      throw Error(ErrorCode::kValidation,
                  "learning_rates entries must be positive, got " +
                      format_lr(lr));
    }
  }
  if (!(weight_decay >= 0.0) || !std::isfinite(weight_decay)) {
    throw Error(ErrorCode::kValidation, "weight_decay must be non-negative");
  }
  if (max_len < 2) {
    throw Error(ErrorCode::kValidation, "max_len must be at least 2");
  }
  if (!(lr_scale > 0.0) || !std::isfinite(lr_scale)) {
    throw Error(ErrorCode::kValidation, "lr_scale must be positive");
  }
}

std::vector<std::size_t> epoch_permutation(std::size_t n, std::uint64_t seed,
                                           std::size_t epoch) {
  const auto e = static_cast<std::uint64_t>(epoch);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(e),
                    static_cast<std::uint32_t>(e >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::string format_epoch_log(double lr, const EpochRecord& record) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "lr=%g epoch=%zu loss=%.6f dev_f1=%.6f", lr,
                record.epoch, record.train_loss, record.dev_f1);
  return buf;
}

Selection select_best(std::span<const double> lrs,
                      std::span<const std::vector<EpochRecord>> histories) {
  if (lrs.size() != histories.size()) {
    throw Error(ErrorCode::kArgument,
                "select_best: learning rate and history counts differ");
  }
  bool found = false;
  Selection best;
  double best_f1 = 0.0;
  for (std::size_t run = 0; run < histories.size(); ++run) {
    for (const EpochRecord& rec : histories[run]) {
      bool better = !found;
      if (found) {
        if (rec.dev_f1 != best_f1) {
          better = rec.dev_f1 > best_f1;
        } else if (rec.epoch != best.epoch) {
          better = rec.epoch < best.epoch;
        } else {
          better = lrs[run] < lrs[best.run];
        }
      }
      if (better) {
        found = true;
        best = {run, rec.epoch};
        best_f1 = rec.dev_f1;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kArgument, "select_best: no epoch records");
  }
  return best;
}

double dev_f1(const Encoder& encoder, const ModelParameters& params,
              const DatasetSplit& split) {
  require_usable(split, "evaluation");
  const std::vector<TokenSequence> seqs = prepare_split(encoder, split);
  const std::vector<Label> gold = split.labels();
  return f1_on(encoder, params, seqs, gold);
}

LrRun train_one(const TrainConfig& config, double lr,
                const DatasetSplit& train, const DatasetSplit& valid,
                const ClassifierModel& init, const EpochCallback& on_epoch) {
  config.validate();
  if (!(lr > 0.0) || !std::isfinite(lr)) {
    throw Error(ErrorCode::kArgument,
                "learning rate must be positive, got " + format_lr(lr));
  }
  require_usable(train, "train");
  require_usable(valid, "valid");
  if (init.spec.max_len != config.max_len) {
    throw Error(ErrorCode::kArgument,
                "encoder max_len " + std::to_string(init.spec.max_len) +
                    " differs from training max_len " +
                    std::to_string(config.max_len));
  }

  const std::unique_ptr<Encoder> encoder = make_encoder(init.spec);
  encoder->check_params(init.params.encoder);

  const std::vector<TokenSequence> train_seqs = prepare_split(*encoder, train);
  const std::vector<Label> train_labels = train.labels();
  const std::vector<TokenSequence> valid_seqs = prepare_split(*encoder, valid);
  const std::vector<Label> valid_labels = valid.labels();

  LrRun run;
  run.lr = lr;
  ModelParameters params = init.params;
  ModelParameters grads = params.zeros_like();
  AdamW optimizer(params, {.lr = lr,
                           .beta1 = 0.9,
                           .beta2 = 0.999,
                           .eps = 1e-8,
                           .weight_decay = config.weight_decay});

  const std::size_t n = train_seqs.size();
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    const std::vector<std::size_t> order =
        epoch_permutation(n, config.seed, epoch);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += config.batch_size) {
      const std::size_t end = std::min(n, start + config.batch_size);
      grads.set_zero();
      double batch_loss = 0.0;
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t idx = order[k];
        batch_loss += accumulate_example_gradient(
            *encoder, params, train_seqs[idx], train_labels[idx], grads);
      }
      const std::size_t step = run.steps + 1;
      if (!std::isfinite(batch_loss)) {
        throw Error(ErrorCode::kDiverged,
                    "non-finite loss at step " + std::to_string(step) +
                        " (epoch " + std::to_string(epoch) + ")");
      }
      scale(grads, 1.0 / static_cast<double>(end - start));
      optimizer.step(params, grads);
      run.steps = step;
      epoch_loss += batch_loss;
    }

    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = epoch_loss / static_cast<double>(n);
    record.dev_f1 = f1_on(*encoder, params, valid_seqs, valid_labels);
    run.history.push_back(record);
    if (run.history.size() == 1 || record.dev_f1 > run.best_dev_f1) {
      run.best_epoch = epoch;
      run.best_dev_f1 = record.dev_f1;
      run.best_params = params;
    }
    if (on_epoch) on_epoch(lr, record);
  }
  return run;
}

TrainResult grid_search(const TrainConfig& config, const DatasetSplit& train,
                        const DatasetSplit& valid, const ClassifierModel& init,
                        const EpochCallback& on_epoch) {
  config.validate();
  TrainResult result;
  result.spec = init.spec;
  for (double grid_lr : config.learning_rates) {
    const double lr = grid_lr * config.lr_scale;
    try {
      result.runs.push_back(train_one(config, lr, train, valid, init, on_epoch));
    } catch (const Error& e) {
      throw Error(e.code(), "lr=" + format_lr(lr) + ": " + e.message());
    }
  }

  std::vector<double> lrs;
  std::vector<std::vector<EpochRecord>> histories;
  for (const LrRun& run : result.runs) {
    lrs.push_back(run.lr);
    histories.push_back(run.history);
  }
  const Selection best = select_best(lrs, histories);
  result.best_run = best.run;
  result.best_epoch = best.epoch;
  result.best_lr = result.runs[best.run].lr;
  result.best_dev_f1 = result.runs[best.run].history[best.epoch - 1].dev_f1;
  return result;
}

}  // namespace infotweet
