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

#include "infotweet/checkpoint.h"

#include <bit>
#include <limits>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "infotweet/error.h"
#include "infotweet/toy_encoder.h"
#include "test_util.h"

namespace infotweet {
namespace {

ClassifierModel random_model(std::mt19937_64& rng) {
  EncoderSpec spec;
  spec.hidden_dim = 1 + rng() % 6;
  spec.vocab_size = 3 + rng() % 30;
  spec.max_len = 2 + rng() % 200;
  spec.normalize_text = rng() % 2 == 0;
  ToyEncoder enc(spec);
  ClassifierModel model = init_model(enc, rng());
  // Arbitrary bit patterns, including subnormals, signed zeros and NaNs.
  for (std::span<double> view : flat_views(model.params)) {
    for (double& x : view) x = std::bit_cast<double>(rng());
  }
  model.params.head.bias = rng() % 2 ? -0.0 : std::numeric_limits<double>::denorm_min();
  return model;
}

TEST(Checkpoint, RoundTripIsBitExact) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const ClassifierModel model = random_model(rng);
    const ClassifierModel back = deserialize_checkpoint(serialize_checkpoint(model));
    ASSERT_TRUE(bitwise_equal(model, back)) << "case " << i;
  }
}

TEST(Checkpoint, SaveAndLoadFile) {
  testing::TempDir dir;
  std::mt19937_64 rng(1);
  const ClassifierModel model = random_model(rng);
  save_checkpoint(model, dir / "ck.bin");
  EXPECT_FALSE(std::filesystem::exists(dir / "ck.bin.tmp"));
  EXPECT_TRUE(bitwise_equal(load_checkpoint(dir / "ck.bin"), model));
}

void expect_checkpoint_error(const std::string& bytes, std::string_view needle) {
  try {
    deserialize_checkpoint(bytes);
    FAIL() << "expected failure containing " << needle;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCheckpoint);
    const std::string what = e.what();
    EXPECT_NE(what.find("format version"), std::string::npos) << what;
    EXPECT_NE(what.find(needle), std::string::npos) << what;
  }
}

TEST(Checkpoint, RejectsCorruption) {
  std::mt19937_64 rng(3);
  const std::string good = serialize_checkpoint(random_model(rng));

  expect_checkpoint_error("", "bad magic");
  expect_checkpoint_error("not a checkpoint at all", "bad magic");

  std::string version = good;
  version[8] = 2;
  expect_checkpoint_error(version, "unsupported format version 2");

  std::string flipped = good;
  flipped[good.size() - 12] ^= 0x40;
  expect_checkpoint_error(flipped, "checksum");

  expect_checkpoint_error(good.substr(0, good.size() - 5), "truncated");
  expect_checkpoint_error(good + "x", "trailing");

  std::string header = good;
  header[20] = '!';
  expect_checkpoint_error(header, "header");
}

}  // namespace
}  // namespace infotweet
