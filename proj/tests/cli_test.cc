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

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "infotweet/ensemble.h"
#include "infotweet/error.h"
#include "run_config.h"
#include "test_util.h"

namespace infotweet::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "infotweet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string path(std::string_view name) const { return (dir_ / name).string(); }
  void write(std::string_view name, std::string_view text) const {
    testing::write_text(dir_ / name, text);
  }

  // Small synthetic corpus plus a quick training config.
  void prepare_run(std::string_view extra = "") const {
    ASSERT_EQ(invoke({"synth", dir_.path().string(), "--train-size", "40",
                      "--valid-size", "20", "--seed", "3"})
                  .code,
              0);
    write("quick.cfg", std::string("train = train.tsv\nvalid = valid.tsv\n"
                                   "output_dir = out\nhidden_dim = 8\n"
                                   "max_len = 32\nepochs = 2\n"
                                   "learning_rates = 1e-5, 5e-5\nseed = 4\n") +
                           std::string(extra));
  }

  testing::TempDir dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"stats"}).code, 2);
  EXPECT_EQ(invoke({"stats", "x", "--check", "dev"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, StatsOnEmptyFile) {
  write("empty.tsv", "");
  const Outcome o = invoke({"stats", path("empty.tsv")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "INFORMATIVE\t0\nUNINFORMATIVE\t0\nunlabeled\t0\ntotal\t0\n");
}

TEST_F(CliTest, StatsMissingFileNamesPath) {
  const Outcome o = invoke({"stats", path("nope.tsv")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("nope.tsv"), std::string::npos) << o.err;
}

TEST_F(CliTest, StatsCheckMismatch) {
  write("s.tsv", "1\thello\tINFORMATIVE\n2\tworld\tUNINFORMATIVE\n");
  const Outcome o = invoke({"stats", path("s.tsv"), "--check", "valid"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("472/528"), std::string::npos) << o.err;
}

TEST_F(CliTest, ConfigErrors) {
  prepare_run();
  write("zero.cfg", "train = train.tsv\nvalid = valid.tsv\noutput_dir = o\n"
                    "epochs = 0\n");
  Outcome o = invoke({"train", path("zero.cfg")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("epochs"), std::string::npos) << o.err;

  write("unknown.cfg", "train = train.tsv\nvalid = valid.tsv\noutput_dir = o\n"
                       "lerning_rate = 1\nscheme = voting\n");
  o = invoke({"train", path("unknown.cfg")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("lerning_rate"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("scheme"), std::string::npos) << o.err;

  write("missing.cfg", "train = train.tsv\noutput_dir = o\n");
  o = invoke({"train", path("missing.cfg")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("valid"), std::string::npos) << o.err;
}

TEST_F(CliTest, RunConfigRoundTrip) {
  prepare_run();
  const RunConfig c = load_run_config(dir_ / "quick.cfg");
  EXPECT_EQ(c.training.epochs, 2u);
  EXPECT_EQ(c.training.max_len, 32u);
  EXPECT_EQ(c.encoder.hidden_dim, 8u);
  EXPECT_EQ(c.effective_lr_scale(), kToyLrMultiplier);
  const RunConfig again = parse_run_config(format_run_config(c), "/");
  EXPECT_EQ(again.train, c.train);
  EXPECT_EQ(again.training.learning_rates, c.training.learning_rates);
  EXPECT_EQ(again.training.seed, c.training.seed);
}

TEST_F(CliTest, TrainPredictEnsembleEvaluate) {
  prepare_run();
  Outcome o = invoke({"train", path("quick.cfg")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("best lr="), std::string::npos);

  const std::string manifest = testing::read_text(dir_ / "out/best/manifest.json");
  const auto m = nlohmann::json::parse(manifest);
  EXPECT_EQ(m.at("checkpoint_format_version"), 1);
  EXPECT_EQ(m.at("encoder").at("name"), "toy");
  const std::string log = testing::read_text(dir_ / "out/train.log");
  EXPECT_EQ(std::count(log.begin(), log.end(), '\n'), 4);

  // Same seed, same bytes.
  ASSERT_EQ(invoke({"train", path("quick.cfg")}).code, 0);
  EXPECT_EQ(testing::read_text(dir_ / "out/best/manifest.json"), manifest);

  write("two.tsv", "a\tcases confirmed today\nb\tlol my cat\n");
  o = invoke({"predict", "--checkpoint", path("out/best/checkpoint.bin"),
              "--input", path("two.tsv"), "--output", path("two.pred"),
              "--probs", path("two.probs")});
  ASSERT_EQ(o.code, 0) << o.err;
  const ModelProbabilities probs = read_probability_file(dir_ / "two.probs");
  ASSERT_EQ(probs.ids, (std::vector<std::string>{"a", "b"}));
  for (const auto& row : probs.rows) {
    EXPECT_NEAR(row[0] + row[1], 1.0, 1e-12);
  }
  const std::string pred = testing::read_text(dir_ / "two.pred");
  EXPECT_EQ(pred.rfind("a\t", 0), 0u) << pred;

  // Per-rate checkpoints: grid rates times the toy multiplier.
  for (const char* lr : {"0.002", "0.01"}) {
    o = invoke({"predict", "--checkpoint",
                path(std::string("out/lr_") + lr + "/checkpoint.bin"), "--input",
                path("valid.tsv"), "--output", path(std::string(lr) + ".pred"),
                "--probs", path(std::string(lr) + ".probs")});
    ASSERT_EQ(o.code, 0) << o.err;
  }
  for (const char* scheme : {"averaging", "voting"}) {
    ASSERT_EQ(invoke({"ensemble", path("0.002.probs"), path("0.01.probs"),
                      "--scheme", scheme, "--output", path("ab.pred")})
                  .code,
              0);
    ASSERT_EQ(invoke({"ensemble", path("0.01.probs"), path("0.002.probs"),
                      "--scheme", scheme, "--output", path("ba.pred")})
                  .code,
              0);
    EXPECT_EQ(testing::read_text(dir_ / "ab.pred"),
              testing::read_text(dir_ / "ba.pred"));
  }
  // One model: the ensemble reproduces its thresholded labels.
  ASSERT_EQ(invoke({"ensemble", path("0.01.probs"), "--output", path("one.pred")})
                .code,
            0);
  EXPECT_EQ(testing::read_text(dir_ / "one.pred"),
            testing::read_text(dir_ / "0.01.pred"));
  EXPECT_EQ(invoke({"ensemble", path("0.01.probs"), path("two.probs"),
                    "--output", path("bad.pred")})
                .code,
            1);
  o = invoke({"evaluate", "--gold", path("valid.tsv"), "--pred",
              path("ab.pred")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("P=", 0), 0u) << o.out;
}

TEST_F(CliTest, Evaluate) {
  write("gold.tsv", "1\ta\tINFORMATIVE\n2\tb\tINFORMATIVE\n"
                    "3\tc\tUNINFORMATIVE\n4\td\tUNINFORMATIVE\n");
  write("same.pred", "4\tUNINFORMATIVE\n3\tUNINFORMATIVE\n"
                     "2\tINFORMATIVE\n1\tINFORMATIVE\n");
  Outcome o = invoke({"evaluate", "--gold", path("gold.tsv"), "--pred",
                      path("same.pred")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "P=1.0000 R=1.0000 F1=1.0000\n");

  write("half.pred", "1\tINFORMATIVE\n2\tUNINFORMATIVE\n"
                     "3\tINFORMATIVE\n4\tUNINFORMATIVE\n");
  o = invoke({"evaluate", "--gold", path("gold.tsv"), "--pred",
              path("half.pred"), "--json"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out).at("f1"), 0.5);

  write("short.pred", "1\tINFORMATIVE\n2\tUNINFORMATIVE\n3\tINFORMATIVE\n");
  o = invoke({"evaluate", "--gold", path("gold.tsv"), "--pred",
              path("short.pred")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("'4'"), std::string::npos) << o.err;

  write("extra.pred", "1\tINFORMATIVE\n2\tUNINFORMATIVE\n3\tINFORMATIVE\n"
                      "4\tINFORMATIVE\n5\tINFORMATIVE\n");
  EXPECT_EQ(invoke({"evaluate", "--gold", path("gold.tsv"), "--pred",
                    path("extra.pred")})
                .code,
            1);
}

TEST_F(CliTest, CorruptedCheckpointNamesFormatVersion) {
  write("bad.bin", "INFOTWCK garbage");
  write("in.tsv", "1\thello\n");
  const Outcome o = invoke({"predict", "--checkpoint", path("bad.bin"),
                            "--input", path("in.tsv"), "--output",
                            path("out.pred")});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("format version"), std::string::npos) << o.err;
}

}  // namespace
}  // namespace infotweet::cli
