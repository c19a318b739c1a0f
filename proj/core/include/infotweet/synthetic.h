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

#ifndef INFOTWEET_SYNTHETIC_H_
#define INFOTWEET_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "infotweet/corpus.h"

namespace infotweet {

struct SyntheticCorpusOptions {
  std::size_t train_size = 400;
  std::size_t valid_size = 100;
  std::uint64_t seed = 13;
};

struct SyntheticCorpus {
  DatasetSplit train;
  DatasetSplit valid;
};

// Keyword vocabularies of the two classes; they share no word.
std::span<const std::string_view> informative_keywords();
std::span<const std::string_view> uninformative_keywords();
std::span<const std::string_view> filler_words();

// Labeled tweets whose class is determined by the keyword vocabulary they
// draw from. Every tweet has at least one class keyword plus shared filler,
// and some carry mentions and links. Classes alternate, so each split is
// balanced to within one record.
SyntheticCorpus make_separable_corpus(const SyntheticCorpusOptions& options);

// Serializes a split in the shared-task file layout, with a header line.
std::string format_split(const DatasetSplit& split);

}  // namespace infotweet

#endif  // INFOTWEET_SYNTHETIC_H_
