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

#ifndef INFOTWEET_MODEL_H_
#define INFOTWEET_MODEL_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "infotweet/encoder.h"
#include "infotweet/label.h"
#include "infotweet/parameters.h"
#include "infotweet/preprocess.h"

namespace infotweet {

// y >= threshold is INFORMATIVE.
inline constexpr double kDecisionThreshold = 0.5;

// Scalar-output linear layer: y = sigmoid(weight . h1 + bias).
struct LinearHead {
  Vector weight;
  double bias = 0.0;
};

// Class-probability row indexed by class (UNINFORMATIVE, INFORMATIVE).
using ProbabilityRow = std::array<double, kNumClasses>;

// Returns h_1. Throws Error(kArgument) on an empty encoding.
Vector pool_first(const ContextualEncoding& encoding);

// Overflow-free logistic function. The result is kept inside the open
// interval (0, 1): it saturates at the smallest positive double and at
// 1 - 2^-53 instead of rounding to exactly 0 or 1.
double sigmoid(double z);

// weight . h1 + bias. Throws Error(kArgument) on dimension mismatch or
// non-finite inputs.
double head_logit(const LinearHead& head, const Vector& h1);
double head_prob(const LinearHead& head, const Vector& h1);

// [1 - y, y]. Throws Error(kArgument) unless 0 < y < 1.
ProbabilityRow to_prob_vector(double y);

Label decide(double y);

// Binary cross-entropy of sigmoid(z) against `target`, evaluated in logit
// space: softplus(z) - t*z.
double bce_with_logit(double z, Label target);

struct ModelParameters {
  ParameterSet encoder;
  LinearHead head;

  ModelParameters zeros_like() const;
  void set_zero();
};

bool bitwise_equal(const ModelParameters& a, const ModelParameters& b);

// Mutable views over every trainable scalar, in a fixed order: encoder
// tensors in set order, then head weight, then head bias.
std::vector<std::span<double>> flat_views(ModelParameters& params);
std::vector<std::span<const double>> flat_views(const ModelParameters& params);

struct ClassifierModel {
  EncoderSpec spec;
  ModelParameters params;
};

// Encoder parameters from encoder.init_params(seed); head weights drawn from
// a seed-derived stream; bias zero.
ClassifierModel init_model(const Encoder& encoder, std::uint64_t seed);

// normalize (if enabled) -> tokenize -> frame(max_len, bos, eos).
TokenSequence prepare_text(const Encoder& encoder, std::string_view text);

// encode -> pool_first -> head_prob.
double predict_probability(const Encoder& encoder,
                           const ModelParameters& params,
                           const TokenSequence& seq);

// Loss for one example; accumulates parameter gradients into `grads`.
double accumulate_example_gradient(const Encoder& encoder,
                                   const ModelParameters& params,
                                   const TokenSequence& seq, Label target,
                                   ModelParameters& grads);

// Loss only; uses the same full-encoding path as predict_probability.
double example_loss(const Encoder& encoder, const ModelParameters& params,
                    const TokenSequence& seq, Label target);

}  // namespace infotweet

#endif  // INFOTWEET_MODEL_H_
