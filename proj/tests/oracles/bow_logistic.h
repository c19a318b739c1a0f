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

#ifndef INFOTWEET_TESTS_ORACLES_BOW_LOGISTIC_H_
#define INFOTWEET_TESTS_ORACLES_BOW_LOGISTIC_H_

#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "infotweet/corpus.h"

// Bag-of-words logistic regression trained by full-batch gradient descent.
// Used only to confirm that a corpus is linearly separable before a neural
// run is judged on it.
namespace infotweet::oracle {

class BowLogistic {
 public:
  void fit(const std::vector<const DatasetSplit*>& splits, int iterations = 400,
           double rate = 1.0) {
    std::vector<std::vector<std::size_t>> docs;
    std::vector<double> targets;
    for (const DatasetSplit* split : splits) {
      for (const auto& r : split->records) {
        docs.push_back(features(r.text, /*grow=*/true));
        targets.push_back(*r.label == Label::kInformative ? 1.0 : 0.0);
      }
    }
    weights_.assign(vocab_.size(), 0.0);
    bias_ = 0.0;
    const double n = static_cast<double>(docs.size());
    for (int it = 0; it < iterations; ++it) {
      std::vector<double> grad(weights_.size(), 0.0);
      double grad_bias = 0.0;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        const double err = prob(docs[i]) - targets[i];
        for (std::size_t f : docs[i]) grad[f] += err;
        grad_bias += err;
      }
      for (std::size_t f = 0; f < weights_.size(); ++f) {
        weights_[f] -= rate * grad[f] / n;
      }
      bias_ -= rate * grad_bias / n;
    }
  }

  // Fraction of records whose thresholded prediction equals the gold label.
  double accuracy(const DatasetSplit& split) {
    std::size_t correct = 0;
    for (const auto& r : split.records) {
      const bool predicted = prob(features(r.text, /*grow=*/false)) >= 0.5;
      correct += predicted == (*r.label == Label::kInformative) ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(split.size());
  }

 private:
  std::vector<std::size_t> features(const std::string& text, bool grow) {
    std::set<std::size_t> out;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
      for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto it = vocab_.find(word);
      if (it == vocab_.end()) {
        if (!grow) continue;
        it = vocab_.emplace(word, vocab_.size()).first;
      }
      out.insert(it->second);
    }
    return {out.begin(), out.end()};
  }

  double prob(const std::vector<std::size_t>& doc) const {
    double z = bias_;
    for (std::size_t f : doc) z += f < weights_.size() ? weights_[f] : 0.0;
    return 1.0 / (1.0 + std::exp(-z));
  }

  std::map<std::string, std::size_t> vocab_;
  std::vector<double> weights_;
  double bias_ = 0.0;
};

}  // namespace infotweet::oracle

#endif  // INFOTWEET_TESTS_ORACLES_BOW_LOGISTIC_H_
