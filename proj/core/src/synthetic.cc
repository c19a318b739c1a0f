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

#include "infotweet/synthetic.h"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace infotweet {
namespace {

constexpr std::array<std::string_view, 10> kInformative = {
    "confirmed", "cases",  "deaths",     "recovered", "hospitalized",
    "tested",    "positive", "fatalities", "icu",     "outbreak",
};

constexpr std::array<std::string_view, 10> kUninformative = {
    "pray", "love", "bored",    "meme",   "hope",
    "feel", "vibes", "watching", "happy", "thanks",
};

constexpr std::array<std::string_view, 18> kFiller = {
    "the",   "today", "in",     "new",     "county",      "people",
    "we",    "all",   "this",   "week",    "covid19",     "coronavirus",
    "update", "just", "and",    "city",    "our",         "now",
};

template <typename T>
const T& pick(std::span<const T> items, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

std::string make_tweet(Label label, std::mt19937_64& rng) {
  std::span<const std::string_view> keywords =
      label == Label::kInformative ? informative_keywords()
                                   : uninformative_keywords();
  std::uniform_int_distribution<int> keyword_count(1, 2);
  std::uniform_int_distribution<int> filler_count(3, 7);
  std::bernoulli_distribution coin(0.3);

  std::vector<std::string> words;
  for (int i = keyword_count(rng); i > 0; --i) {
    words.emplace_back(pick(keywords, rng));
  }
  for (int i = filler_count(rng); i > 0; --i) {
    words.emplace_back(pick(filler_words(), rng));
  }
  if (coin(rng)) {
    words.push_back(std::to_string(std::uniform_int_distribution<int>(1, 999)(rng)));
  }
  std::shuffle(words.begin(), words.end(), rng);
  if (coin(rng)) {
    words.insert(words.begin(),
                 "@user" + std::to_string(std::uniform_int_distribution<int>(
                               1, 9999)(rng)));
  }
  if (coin(rng)) words.emplace_back("https://t.co/x" + std::to_string(rng() % 100000));

  std::string text;
  for (const auto& w : words) {
    if (!text.empty()) text += ' ';
    text += w;
  }
  return text;
}

DatasetSplit make_split(SplitName name, std::size_t size, std::string_view prefix,
                        std::mt19937_64& rng) {
  DatasetSplit split;
  split.name = name;
  for (std::size_t i = 0; i < size; ++i) {
    const Label label = i % 2 == 0 ? Label::kInformative : Label::kUninformative;
    split.records.push_back(
        {std::string(prefix) + std::to_string(i + 1), make_tweet(label, rng), label});
  }
  return split;
}

}  // namespace

std::span<const std::string_view> informative_keywords() { return kInformative; }
std::span<const std::string_view> uninformative_keywords() {
  return kUninformative;
}
std::span<const std::string_view> filler_words() { return kFiller; }

SyntheticCorpus make_separable_corpus(const SyntheticCorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  SyntheticCorpus corpus;
  corpus.train = make_split(SplitName::kTrain, options.train_size, "t", rng);
  corpus.valid = make_split(SplitName::kValid, options.valid_size, "v", rng);
  return corpus;
}

std::string format_split(const DatasetSplit& split) {
  std::string out = "Id\tText\tLabel\n";
  for (const auto& r : split.records) {
    out += r.id;
    out += '\t';
    out += r.text;
    if (r.label) {
      out += '\t';
      out += label_name(*r.label);
    }
    out += '\n';
  }
  return out;
}

}  // namespace infotweet
