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

#include "infotweet/corpus.h"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "infotweet/error.h"
#include "test_util.h"

namespace infotweet {
namespace {

using testing::TempDir;
using testing::read_text;
using testing::write_text;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an infotweet::Error";
  return ErrorCode::kArgument;
}

TEST(LoadSplit, ReadsLabeledLines) {
  const DatasetSplit split = parse_split(
      "1\thospital reports 12 new cases\tINFORMATIVE\n"
      "2\tstay safe everyone\tUNINFORMATIVE\n",
      /*expect_labels=*/true);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split.records[0].id, "1");
  EXPECT_EQ(split.records[0].text, "hospital reports 12 new cases");
  EXPECT_EQ(split.labels(),
            (std::vector<Label>{Label::kInformative, Label::kUninformative}));
}

TEST(LoadSplit, EmptyFileGivesEmptySplit) {
  TempDir dir;
  write_text(dir / "empty.tsv", "");
  EXPECT_TRUE(load_split(dir / "empty.tsv", true).empty());
}

TEST(LoadSplit, MissingLabelNamesLineOne) {
  try {
    parse_split("3\tonly two fields missing tab\n", true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingLabel);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

TEST(LoadSplit, SkipsHeaderAndParsesLabelsLoosely) {
  const DatasetSplit split = parse_split(
      "Id\tText\tLabel\r\n"
      "10\tfoo\t informative \r\n"
      "\n"
      "11\tbar\tUnInformative\n",
      true);
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(*split.records[0].label, Label::kInformative);
  EXPECT_EQ(*split.records[1].label, Label::kUninformative);
}

TEST(LoadSplit, UnlabeledAllowedWhenNotExpected) {
  const DatasetSplit split = parse_split("1\ta\n2\tb\tINFORMATIVE\n", false);
  EXPECT_FALSE(split.records[0].label.has_value());
  EXPECT_FALSE(split.fully_labeled());
  EXPECT_EQ(code_of([&] { (void)split.labels(); }), ErrorCode::kMissingLabel);
}

TEST(LoadSplit, ErrorKinds) {
  EXPECT_EQ(code_of([] { parse_split("1\ta\tb\tc\n", false); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_split("1 no tabs at all\n", false); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_split("1\ta\tMAYBE\n", false); }),
            ErrorCode::kLabel);
  EXPECT_EQ(code_of([] { parse_split("1\ta\n1\tb\n", false); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_split("1\t   \n", false); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_split("\tx\n", false); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { load_split("/nonexistent/split.tsv", false); }),
            ErrorCode::kIo);
}

TEST(LoadSplit, MalformedLineErrorNamesLine) {
  try {
    parse_split("1\ta\tINFORMATIVE\n2\tb\tINFORMATIVE\textra\n", true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ComputeStats, CountsLabelsAndUnlabeled) {
  const DatasetSplit split = parse_split(
      "1\ta\tINFORMATIVE\n2\tb\tUNINFORMATIVE\n3\tc\tINFORMATIVE\n4\td\n",
      false);
  const CorpusStats stats = compute_stats(split);
  EXPECT_EQ(stats.informative, 2u);
  EXPECT_EQ(stats.uninformative, 1u);
  EXPECT_EQ(stats.unlabeled, 1u);
  EXPECT_EQ(stats.total, 4u);
  EXPECT_EQ(compute_stats(DatasetSplit{}), (CorpusStats{0, 0, 0, 0}));
}

TEST(ComputeStats, ReferenceCountsMatchOfficialRelease) {
  EXPECT_EQ(reference_stats(SplitName::kTrain), (CorpusStats{3303, 3697, 0, 7000}));
  EXPECT_EQ(reference_stats(SplitName::kValid), (CorpusStats{472, 528, 0, 1000}));
  EXPECT_EQ(reference_stats(SplitName::kTest), (CorpusStats{944, 1056, 0, 2000}));
}

TEST(WritePredictions, WritesTabSeparatedLines) {
  TempDir dir;
  const std::vector<std::string> ids{"1", "2"};
  const std::vector<Label> labels{Label::kInformative, Label::kUninformative};
  write_predictions(ids, labels, dir / "p.tsv");
  EXPECT_EQ(read_text(dir / "p.tsv"), "1\tINFORMATIVE\n2\tUNINFORMATIVE\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "p.tsv.tmp"));
}

TEST(WritePredictions, EmptyInputsGiveEmptyFile) {
  TempDir dir;
  write_predictions({}, {}, dir / "p.tsv");
  EXPECT_EQ(read_text(dir / "p.tsv"), "");
}

TEST(WritePredictions, Errors) {
  TempDir dir;
  const std::vector<std::string> ids{"1"};
  EXPECT_EQ(code_of([&] { write_predictions(ids, {}, dir / "p.tsv"); }),
            ErrorCode::kArgument);
  const std::vector<Label> one{Label::kInformative};
  EXPECT_EQ(code_of([&] {
              write_predictions(ids, one, dir / "missing" / "p.tsv");
            }),
            ErrorCode::kIo);
  const std::vector<std::string> bad{"a\tb"};
  EXPECT_EQ(code_of([&] { write_predictions(bad, one, dir / "p.tsv"); }),
            ErrorCode::kArgument);
}

// Property: write then read reproduces ids and labels for printable-ASCII ids.
TEST(WritePredictions, RoundTripRandomPayloads) {
  TempDir dir;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 500)(rng);
    std::vector<std::string> ids;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i) {
      std::string id;
      const int len = std::uniform_int_distribution<int>(1, 12)(rng);
      for (int k = 0; k < len; ++k) {
        id += static_cast<char>(std::uniform_int_distribution<int>(0x20, 0x7e)(rng));
      }
      id += static_cast<char>('a' + i % 26);
      ids.push_back(id);
      labels.push_back(label_from_index(static_cast<int>(rng() % 2)));
    }
    write_predictions(ids, labels, dir / "p.tsv");
    const std::vector<Prediction> back = read_predictions(dir / "p.tsv");
    ASSERT_EQ(back.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(back[i].id, ids[i]);
      ASSERT_EQ(back[i].label, labels[i]);
    }
  }
}

// Property: stats total equals the number of data lines, and order is kept.
TEST(LoadSplit, TotalsAndOrderMatchDataLines) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 200)(rng);
    const bool header = rng() % 2 == 0;
    std::string text = header ? "Id\tText\tLabel\n" : "";
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
      ids.push_back(std::to_string(rng() % 1000000) + "_" + std::to_string(i));
      text += ids.back() + "\ttweet " + std::to_string(i);
      switch (rng() % 3) {
        case 0: text += "\tINFORMATIVE"; break;
        case 1: text += "\tuninformative"; break;
        default: break;
      }
      text += "\n";
    }
    const DatasetSplit split = parse_split(text, false);
    EXPECT_EQ(compute_stats(split).total, static_cast<std::size_t>(n));
    EXPECT_EQ(split.ids(), ids);
  }
}

TEST(Label, NamesAndIndices) {
  EXPECT_EQ(to_index(Label::kInformative), 1);
  EXPECT_EQ(to_index(Label::kUninformative), 0);
  EXPECT_EQ(label_name(Label::kInformative), "INFORMATIVE");
  EXPECT_EQ(parse_label("\tinformative\n"), Label::kInformative);
  EXPECT_FALSE(parse_label("INFO").has_value());
  EXPECT_EQ(code_of([] { label_from_index(2); }), ErrorCode::kArgument);
}

}  // namespace
}  // namespace infotweet
