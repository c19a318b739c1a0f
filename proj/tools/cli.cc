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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "infotweet/checkpoint.h"
#include "infotweet/encoder.h"
#include "infotweet/error.h"
#include "infotweet/model.h"
#include "infotweet/synthetic.h"
#include "run_config.h"

namespace infotweet::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string lr_dir_name(double lr) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "lr_%g", lr);
  return buf;
}

ordered_json spec_json(const EncoderSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["hidden_dim"] = spec.hidden_dim;
  j["max_len"] = spec.max_len;
  j["vocab_size"] = spec.vocab_size;
  j["normalize_text"] = spec.normalize_text;
  return j;
}

void create_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create directory '" + dir.string() +
                                    "': " + ec.message());
  }
}

// Probability of INFORMATIVE for every record, in order.
std::vector<double> predict_split(const ClassifierModel& model,
                                  const DatasetSplit& split) {
  const std::unique_ptr<Encoder> encoder = make_encoder(model.spec);
  encoder->check_params(model.params.encoder);
  if (model.params.head.weight.size() !=
      static_cast<Eigen::Index>(model.spec.hidden_dim)) {
    throw Error(ErrorCode::kConfiguration,
                "head dimension " +
                    std::to_string(model.params.head.weight.size()) +
                    " does not match hidden_dim " +
                    std::to_string(model.spec.hidden_dim));
  }
  std::vector<double> probs;
  probs.reserve(split.size());
  for (const auto& r : split.records) {
    probs.push_back(predict_probability(*encoder, model.params,
                                        prepare_text(*encoder, r.text)));
  }
  return probs;
}

void write_outputs(const DatasetSplit& split, std::span<const double> probs,
                   const fs::path& output,
                   const std::optional<fs::path>& probabilities) {
  std::vector<Label> labels;
  labels.reserve(probs.size());
  for (double y : probs) labels.push_back(decide(y));
  const std::vector<std::string> ids = split.ids();
  write_predictions(ids, labels, output);
  if (probabilities) {
    ModelProbabilities mp;
    mp.model_id = probabilities->string();
    mp.ids = ids;
    for (double y : probs) mp.rows.push_back(to_prob_vector(y));
    write_probability_file(mp, *probabilities);
  }
}

}  // namespace

CorpusStats cmd_stats(const fs::path& split_path,
                      std::optional<SplitName> check, std::ostream& out) {
  const CorpusStats stats =
      compute_stats(load_split(split_path, /*expect_labels=*/false));
  out << "INFORMATIVE\t" << stats.informative << "\n"
      << "UNINFORMATIVE\t" << stats.uninformative << "\n"
      << "unlabeled\t" << stats.unlabeled << "\n"
      << "total\t" << stats.total << "\n";
  if (check) {
    const CorpusStats ref = reference_stats(*check);
    if (stats.informative != ref.informative ||
        stats.uninformative != ref.uninformative) {
      throw Error(ErrorCode::kValidation,
                  "counts differ from the official " +
                      std::string(split_name(*check)) + " split (" +
                      std::to_string(ref.informative) + "/" +
                      std::to_string(ref.uninformative) + ")");
    }
    out << "matches official " << split_name(*check) << " counts\n";
  }
  return stats;
}

TrainResult cmd_train(const fs::path& config_path, std::ostream& out) {
  const RunConfig config = load_run_config(config_path);
  const DatasetSplit train = load_split(config.train, true, SplitName::kTrain);
  const DatasetSplit valid = load_split(config.valid, true, SplitName::kValid);
  std::optional<DatasetSplit> test;
  if (config.test) test = load_split(*config.test, false, SplitName::kTest);

  const std::unique_ptr<Encoder> encoder = make_encoder(config.encoder);
  const ClassifierModel init = init_model(*encoder, config.training.seed);

  create_dir(config.output_dir);
  std::ofstream log(config.output_dir / "train.log", std::ios::trunc);
  if (!log) {
    throw Error(ErrorCode::kIo, "cannot write '" +
                                    (config.output_dir / "train.log").string() +
                                    "'");
  }
  const TrainResult result =
      grid_search(config.training, train, valid, init,
                  [&](double lr, const EpochRecord& rec) {
                    const std::string line = format_epoch_log(lr, rec);
                    log << line << "\n" << std::flush;
                    out << line << "\n";
                  });

  ordered_json grid = ordered_json::array();
  for (const LrRun& run : result.runs) grid.push_back(run.lr);

  for (const LrRun& run : result.runs) {
    const fs::path dir = config.output_dir / lr_dir_name(run.lr);
    create_dir(dir);
    save_checkpoint({result.spec, run.best_params}, dir / "checkpoint.bin");
    ordered_json m;
    m["lr"] = run.lr;
    m["best_epoch"] = run.best_epoch;
    m["dev_f1"] = run.best_dev_f1;
    m["steps"] = run.steps;
    write_file_atomically(dir / "manifest.json", m.dump(2) + "\n");
  }

  const fs::path best_dir = config.output_dir / "best";
  create_dir(best_dir);
  const ClassifierModel best = result.best_checkpoint();
  save_checkpoint(best, best_dir / "checkpoint.bin");
  ordered_json manifest;
  manifest["checkpoint_format_version"] = kCheckpointFormatVersion;
  manifest["encoder"] = spec_json(result.spec);
  manifest["best_lr"] = result.best_lr;
  manifest["best_epoch"] = result.best_epoch;
  manifest["dev_f1"] = result.best_dev_f1;
  manifest["learning_rates"] = grid;
  manifest["epochs"] = config.training.epochs;
  manifest["batch_size"] = config.training.batch_size;
  manifest["weight_decay"] = config.training.weight_decay;
  manifest["seed"] = config.training.seed;
  write_file_atomically(best_dir / "manifest.json", manifest.dump(2) + "\n");

  if (test) {
    write_outputs(*test, predict_split(best, *test),
                  best_dir / "test_predictions.tsv",
                  best_dir / "test_probabilities.tsv");
  }

  char summary[160];
  std::snprintf(summary, sizeof(summary), "best lr=%g epoch=%zu dev_f1=%.4f",
                result.best_lr, result.best_epoch, result.best_dev_f1);
  out << summary << "\n";
  return result;
}

void cmd_predict(const fs::path& checkpoint, const fs::path& input,
                 const fs::path& output,
                 const std::optional<fs::path>& probabilities) {
  const ClassifierModel model = load_checkpoint(checkpoint);
  const DatasetSplit split = load_split(input, false, SplitName::kTest);
  write_outputs(split, predict_split(model, split), output, probabilities);
}

void cmd_ensemble(std::span<const fs::path> probability_files, Scheme scheme,
                  const fs::path& output) {
  std::vector<ModelProbabilities> models;
  for (const auto& path : probability_files) {
    models.push_back(read_probability_file(path));
  }
  const std::vector<Prediction> preds = combine_batch(models, scheme);
  std::vector<std::string> ids;
  std::vector<Label> labels;
  for (const auto& p : preds) {
    ids.push_back(p.id);
    labels.push_back(p.label);
  }
  write_predictions(ids, labels, output);
}

EvaluationReport cmd_evaluate(const fs::path& gold_path,
                              const fs::path& predictions, bool json,
                              std::ostream& out) {
  const DatasetSplit gold = load_split(gold_path, true, SplitName::kValid);
  std::map<std::string, Label, std::less<>> by_id;
  for (const Prediction& p : read_predictions(predictions)) {
    if (!by_id.emplace(p.id, p.label).second) {
      throw Error(ErrorCode::kJoin, "prediction id '" + p.id + "' repeats");
    }
  }
  std::vector<Label> gold_labels;
  std::vector<Label> pred_labels;
  for (const auto& r : gold.records) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kJoin, "no prediction for gold id '" + r.id + "'");
    }
    gold_labels.push_back(*r.label);
    pred_labels.push_back(it->second);
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw Error(ErrorCode::kJoin, "prediction id '" + by_id.begin()->first +
                                      "' is not in the gold file");
  }
  const EvaluationReport report = evaluate(gold_labels, pred_labels);
  out << (json ? report_to_json(report) : format_report(report)) << "\n";
  return report;
}

void cmd_synth(const fs::path& dir, std::size_t train_size,
               std::size_t valid_size, std::uint64_t seed, std::ostream& out) {
  create_dir(dir);
  const SyntheticCorpus corpus =
      make_separable_corpus({train_size, valid_size, seed});
  write_file_atomically(dir / "train.tsv", format_split(corpus.train));
  write_file_atomically(dir / "valid.tsv", format_split(corpus.valid));
  const std::string config =
      "# Toy encoder on the synthetic corpus.\n"
      "train = train.tsv\n"
      "valid = valid.tsv\n"
      "output_dir = run\n"
      "encoder = toy\n"
      "hidden_dim = 32\n"
      "epochs = 30\n"
      "seed = " + std::to_string(seed) + "\n";
  write_file_atomically(dir / "toy.cfg", config);
  out << "wrote " << (dir / "train.tsv").string() << ", "
      << (dir / "valid.tsv").string() << ", " << (dir / "toy.cfg").string()
      << "\n";
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Informative COVID-19 tweet classification toolkit",
               "infotweet"};
  app.require_subcommand(1);

  std::string stats_path;
  std::string stats_check;
  auto* stats = app.add_subcommand("stats", "Print label counts of a split");
  stats->add_option("split", stats_path, "Split file (id, text[, label])")
      ->required();
  stats->add_option("--check", stats_check,
                    "Compare against the official counts of this split")
      ->check(CLI::IsMember({"train", "valid", "test"}));

  std::string config_path;
  auto* train = app.add_subcommand(
      "train", "Grid-search fine-tuning with best-checkpoint selection");
  train->add_option("config", config_path, "key = value run configuration")
      ->required();

  std::string checkpoint;
  std::string input;
  std::string output;
  std::string probs;
  auto* predict =
      app.add_subcommand("predict", "Label a split with a checkpoint");
  predict->add_option("--checkpoint", checkpoint, "Checkpoint file")
      ->required();
  predict->add_option("--input", input, "Split file to label")->required();
  predict->add_option("--output", output, "Prediction file (id<TAB>LABEL)")
      ->required();
  predict->add_option("--probs", probs,
                      "Also write id<TAB>p_uninformative<TAB>p_informative");

  std::vector<std::string> prob_files;
  std::string scheme = "averaging";
  std::string ensemble_output;
  auto* ensemble =
      app.add_subcommand("ensemble", "Combine per-model probability files");
  ensemble->add_option("files", prob_files, "Probability files")->required();
  ensemble->add_option("--scheme", scheme, "averaging or voting")
      ->check(CLI::IsMember({"averaging", "voting"}));
  ensemble->add_option("--output", ensemble_output, "Prediction file")
      ->required();

  std::string gold;
  std::string pred;
  bool json = false;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Precision, recall and F1 of the INFORMATIVE class");
  evaluate_cmd->add_option("--gold", gold, "Labeled split file")->required();
  evaluate_cmd->add_option("--pred", pred, "Prediction file")->required();
  evaluate_cmd->add_flag("--json", json, "Print a JSON report");

  std::string synth_dir;
  std::size_t synth_train = 400;
  std::size_t synth_valid = 100;
  std::uint64_t synth_seed = 13;
  auto* synth = app.add_subcommand(
      "synth", "Write a synthetic separable corpus and a toy config");
  synth->add_option("dir", synth_dir, "Output directory")->required();
  synth->add_option("--train-size", synth_train, "Training records");
  synth->add_option("--valid-size", synth_valid, "Validation records");
  synth->add_option("--seed", synth_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stats) {
      std::optional<SplitName> check;
      if (stats_check == "train") check = SplitName::kTrain;
      if (stats_check == "valid") check = SplitName::kValid;
      if (stats_check == "test") check = SplitName::kTest;
      cmd_stats(stats_path, check, out);
    } else if (*train) {
      cmd_train(config_path, out);
    } else if (*predict) {
      std::optional<fs::path> probs_path;
      if (!probs.empty()) probs_path = probs;
      cmd_predict(checkpoint, input, output, probs_path);
    } else if (*ensemble) {
      std::vector<fs::path> paths(prob_files.begin(), prob_files.end());
      cmd_ensemble(paths, parse_scheme(scheme), ensemble_output);
    } else if (*evaluate_cmd) {
      cmd_evaluate(gold, pred, json, out);
    } else if (*synth) {
      cmd_synth(synth_dir, synth_train, synth_valid, synth_seed, out);
    }
  } catch (const Error& e) {
    err << "infotweet: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "infotweet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace infotweet::cli
