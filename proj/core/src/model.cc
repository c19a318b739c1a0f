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

#include "infotweet/model.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <string>

#include "infotweet/error.h"

namespace infotweet {
namespace {

constexpr double kMinProb = std::numeric_limits<double>::denorm_min();
// Largest double below 1.
constexpr double kMaxProb = 1.0 - std::numeric_limits<double>::epsilon() / 2;

double softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

}  // namespace

Vector pool_first(const ContextualEncoding& encoding) {
  if (encoding.empty()) {
    throw Error(ErrorCode::kArgument, "pool_first: empty encoding");
  }
  return encoding.vectors.row(0).transpose();
}

double sigmoid(double z) {
  double y;
  if (z >= 0) {
    y = 1.0 / (1.0 + std::exp(-z));
  } else {
    const double e = std::exp(z);
    y = e / (1.0 + e);
  }
  return std::clamp(y, kMinProb, kMaxProb);
}

double head_logit(const LinearHead& head, const Vector& h1) {
  if (h1.size() != head.weight.size()) {
    throw Error(ErrorCode::kArgument,
                "head: input has dimension " + std::to_string(h1.size()) +
                    ", weight has " + std::to_string(head.weight.size()));
  }
  if (!h1.allFinite() || !head.weight.allFinite() || !std::isfinite(head.bias)) {
    throw Error(ErrorCode::kArgument, "head: non-finite input or parameter");
  }
  return head.weight.dot(h1) + head.bias;
}

double head_prob(const LinearHead& head, const Vector& h1) {
  return sigmoid(head_logit(head, h1));
}

ProbabilityRow to_prob_vector(double y) {
  if (!(y > 0.0 && y < 1.0)) {
    throw Error(ErrorCode::kArgument,
                "probability " + std::to_string(y) + " is outside (0, 1)");
  }
  return {1.0 - y, y};
}

Label decide(double y) {
  return y >= kDecisionThreshold ? Label::kInformative : Label::kUninformative;
}

double bce_with_logit(double z, Label target) {
  const double t = target == Label::kInformative ? 1.0 : 0.0;
  return softplus(z) - t * z;
}

ModelParameters ModelParameters::zeros_like() const {
  ModelParameters out;
  out.encoder = encoder.zeros_like();
  out.head.weight = Vector::Zero(head.weight.size());
  out.head.bias = 0.0;
  return out;
}

void ModelParameters::set_zero() {
  encoder.set_zero();
  head.weight.setZero();
  head.bias = 0.0;
}

bool bitwise_equal(const ModelParameters& a, const ModelParameters& b) {
  if (!bitwise_equal(a.encoder, b.encoder)) return false;
  if (a.head.weight.size() != b.head.weight.size()) return false;
  if (std::memcmp(a.head.weight.data(), b.head.weight.data(),
                  static_cast<std::size_t>(a.head.weight.size()) *
                      sizeof(double)) != 0) {
    return false;
  }
  return std::memcmp(&a.head.bias, &b.head.bias, sizeof(double)) == 0;
}

std::vector<std::span<double>> flat_views(ModelParameters& params) {
  std::vector<std::span<double>> views;
  for (auto& e : params.encoder.entries()) {
    views.emplace_back(e.value.data(), static_cast<std::size_t>(e.value.size()));
  }
  views.emplace_back(params.head.weight.data(),
                     static_cast<std::size_t>(params.head.weight.size()));
  views.emplace_back(&params.head.bias, 1);
  return views;
}

std::vector<std::span<const double>> flat_views(const ModelParameters& params) {
  std::vector<std::span<const double>> views;
  for (const auto& e : params.encoder.entries()) {
    views.emplace_back(e.value.data(), static_cast<std::size_t>(e.value.size()));
  }
  views.emplace_back(params.head.weight.data(),
                     static_cast<std::size_t>(params.head.weight.size()));
  views.emplace_back(&params.head.bias, 1);
  return views;
}

ClassifierModel init_model(const Encoder& encoder, std::uint64_t seed) {
  ClassifierModel model;
  model.spec = encoder.spec();
  model.params.encoder = encoder.init_params(seed);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x68u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> dist(0.0, 0.02);
  const auto d = static_cast<Eigen::Index>(encoder.spec().hidden_dim);
  model.params.head.weight.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) model.params.head.weight(i) = dist(rng);
  model.params.head.bias = 0.0;
  return model;
}

TokenSequence prepare_text(const Encoder& encoder, std::string_view text) {
  const EncoderSpec& spec = encoder.spec();
  const std::vector<std::string> tokens =
      spec.normalize_text ? encoder.tokenize(normalize(text))
                          : encoder.tokenize(text);
  return frame(tokens, spec.max_len, encoder.bos_token(), encoder.eos_token());
}

double predict_probability(const Encoder& encoder,
                           const ModelParameters& params,
                           const TokenSequence& seq) {
  return head_prob(params.head,
                   pool_first(encoder.encode(seq, params.encoder)));
}

double example_loss(const Encoder& encoder, const ModelParameters& params,
                    const TokenSequence& seq, Label target) {
  const Vector h1 = pool_first(encoder.encode(seq, params.encoder));
  return bce_with_logit(head_logit(params.head, h1), target);
}

double accumulate_example_gradient(const Encoder& encoder,
                                   const ModelParameters& params,
                                   const TokenSequence& seq, Label target,
                                   ModelParameters& grads) {
  const double t = target == Label::kInformative ? 1.0 : 0.0;
  double loss = 0.0;
  encoder.backprop_first(
      seq, params.encoder,
      [&](const Vector& h1) -> Vector {
        if (h1.size() != params.head.weight.size()) {
          throw Error(ErrorCode::kArgument, "head: dimension mismatch");
        }
        // No finiteness check here: a non-finite z yields a non-finite loss,
        // which the trainer reports as divergence.
        const double z = params.head.weight.dot(h1) + params.head.bias;
        loss = bce_with_logit(z, target);
        // d/dz [softplus(z) - t z] = sigmoid(z) - t, unclamped.
        const double dz = (z >= 0 ? 1.0 / (1.0 + std::exp(-z))
                                  : std::exp(z) / (1.0 + std::exp(z))) -
                          t;
        grads.head.weight.noalias() += dz * h1;
        grads.head.bias += dz;
        return dz * params.head.weight;
      },
      grads.encoder);
  return loss;
}

}  // namespace infotweet
