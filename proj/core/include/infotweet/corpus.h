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

#ifndef INFOTWEET_CORPUS_H_
#define INFOTWEET_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infotweet/label.h"

namespace infotweet {

struct TweetRecord {
  std::string id;
  std::string text;
  std::optional<Label> label;

  bool operator==(const TweetRecord&) const = default;
};

enum class SplitName { kTrain, kValid, kTest };

std::string_view split_name(SplitName name);

struct DatasetSplit {
  SplitName name = SplitName::kTrain;
  std::vector<TweetRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  bool fully_labeled() const;

  std::vector<std::string> ids() const;
  // Throws Error(kMissingLabel) if any record is unlabeled.
  std::vector<Label> labels() const;
};

struct CorpusStats {
  std::size_t informative = 0;
  std::size_t uninformative = 0;
  std::size_t unlabeled = 0;
  std::size_t total = 0;

  std::size_t count(Label label) const {
    return label == Label::kInformative ? informative : uninformative;
  }
  bool operator==(const CorpusStats&) const = default;
};

// Reads a tab-separated split file: "id<TAB>text" or "id<TAB>text<TAB>label"
// per line, with an optional leading header line whose first cell is "Id".
// Blank lines are skipped. Ids must be unique and texts non-blank.
//
// Tabs inside tweet text are not representable in this format.
DatasetSplit load_split(const std::filesystem::path& path, bool expect_labels,
                        SplitName name = SplitName::kTrain);

// Same parser over an in-memory buffer; `source` is used in error messages.
DatasetSplit parse_split(std::string_view contents, bool expect_labels,
                         SplitName name = SplitName::kTrain,
                         std::string_view source = "<memory>");

CorpusStats compute_stats(const DatasetSplit& split);

// Label counts of the official shared-task release, per split.
CorpusStats reference_stats(SplitName name);

// Writes "id<TAB>LABEL\n" per record in input order. The file is written to
// a temporary sibling and renamed into place. Throws Error(kArgument) on a
// length mismatch or a blank id or one containing a tab or line break.
void write_predictions(std::span<const std::string> ids,
                       std::span<const Label> labels,
                       const std::filesystem::path& path);

struct Prediction {
  std::string id;
  Label label;

  bool operator==(const Prediction&) const = default;
};

// Ids are read verbatim (no trimming, no header line), so any id accepted by
// write_predictions round-trips exactly.
std::vector<Prediction> read_predictions(const std::filesystem::path& path);

// Shared by every writer in the library: write to "<path>.tmp" then rename.
void write_file_atomically(const std::filesystem::path& path,
                           std::string_view contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace infotweet

#endif  // INFOTWEET_CORPUS_H_
