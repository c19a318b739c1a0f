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

#ifndef INFOTWEET_TESTS_GRADIENT_CHECK_H_
#define INFOTWEET_TESTS_GRADIENT_CHECK_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "infotweet/model.h"
#include "infotweet/toy_encoder.h"
#include "oracles/finite_difference.h"

namespace infotweet::testing {

struct GradientCheck {
  std::size_t hidden_dim = 0;
  std::size_t tokens = 0;
  std::size_t parameters = 0;
  double relative_error = 0.0;
};

// Builds a random toy model (d <= 8, small vocabulary, random sequence and
// target) and compares the analytic BCE gradient against central differences
// of the full-encoding loss.
inline GradientCheck check_random_gradient(std::uint64_t seed,
                                           double step = 1e-5) {
  std::mt19937_64 rng(seed);
  EncoderSpec spec;
  spec.hidden_dim = 1 + rng() % 8;
  spec.vocab_size = 5 + rng() % 20;
  spec.max_len = 12;
  ToyEncoder encoder(spec);

  ClassifierModel model = init_model(encoder, rng());
  std::normal_distribution<double> noise(0.0, 0.5);
  for (std::span<double> view : flat_views(model.params)) {
    for (double& x : view) x = noise(rng);
  }

  std::vector<std::string> words;
  const std::size_t n_words = rng() % 7;
  for (std::size_t i = 0; i < n_words; ++i) {
    words.push_back("w" + std::to_string(rng() % 9));
  }
  const TokenSequence seq =
      frame(words, spec.max_len, encoder.bos_token(), encoder.eos_token());
  const Label target = rng() % 2 ? Label::kInformative : Label::kUninformative;

  ModelParameters grads = model.params.zeros_like();
  accumulate_example_gradient(encoder, model.params, seq, target, grads);
  std::vector<double> analytic;
  for (std::span<const double> view : flat_views(std::as_const(grads))) {
    analytic.insert(analytic.end(), view.begin(), view.end());
  }

  std::vector<std::span<double>> views = flat_views(model.params);
  const std::vector<double> numeric = oracle::central_differences(
      views, [&] { return example_loss(encoder, model.params, seq, target); },
      step);

  return {spec.hidden_dim, seq.size(), analytic.size(),
          oracle::relative_error(analytic, numeric)};
}

}  // namespace infotweet::testing

#endif  // INFOTWEET_TESTS_GRADIENT_CHECK_H_
