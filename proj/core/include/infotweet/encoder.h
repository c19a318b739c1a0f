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

#ifndef INFOTWEET_ENCODER_H_
#define INFOTWEET_ENCODER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infotweet/parameters.h"
#include "infotweet/preprocess.h"

namespace infotweet {

inline constexpr std::string_view kToyEncoderName = "toy";

// Registry keys accepted in EncoderSpec::name.
std::span<const std::string_view> known_encoder_names();
bool is_known_encoder(std::string_view name);

struct EncoderSpec {
  std::string name{kToyEncoderName};
  std::size_t hidden_dim = 32;
  std::size_t max_len = kDefaultMaxLen;
  // Hashed vocabulary size; only meaningful for the toy encoder.
  std::size_t vocab_size = 4096;
  // Apply normalize() before tokenization.
  bool normalize_text = true;

  bool operator==(const EncoderSpec&) const = default;
};

// H = {h_1 .. h_n}: one row per framed token, hidden_dim columns.
struct ContextualEncoding {
  Matrix vectors;

  std::size_t size() const { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(vectors.cols()); }
  bool empty() const { return vectors.rows() == 0; }
};

// Upstream gradient callback: receives h_1, returns dLoss/dh_1.
using PooledGradientFn = std::function<Vector(const Vector& h1)>;

// A contextual encoder architecture. Instances are stateless with respect to
// parameters; the same encoder can evaluate any ParameterSet of the right
// layout, which is what lets the trainer keep snapshots cheaply.
class Encoder {
 public:
  virtual ~Encoder() = default;

  virtual const EncoderSpec& spec() const = 0;
  virtual std::string_view bos_token() const = 0;
  virtual std::string_view eos_token() const = 0;

  // Sub-token tokenization of (already normalized) text. Never throws on
  // unknown words.
  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;

  virtual ParameterSet init_params(std::uint64_t seed) const = 0;

  // Throws Error(kConfiguration) when the layout does not match spec().
  virtual void check_params(const ParameterSet& params) const = 0;

  // Evaluation-mode forward pass over the whole sequence.
  virtual ContextualEncoding encode(const TokenSequence& seq,
                                    const ParameterSet& params) const = 0;

  // Forward pass for h_1 only, then back-propagates the gradient returned by
  // `upstream` into `grads` (accumulated, not overwritten). Returns h_1.
  virtual Vector backprop_first(const TokenSequence& seq,
                                const ParameterSet& params,
                                const PooledGradientFn& upstream,
                                ParameterSet& grads) const = 0;
};

using EncoderFactory =
    std::function<std::unique_ptr<Encoder>(const EncoderSpec& spec)>;

// Installs an adapter for one of the pretrained registry names. The toy
// encoder is built in and cannot be replaced.
void register_encoder_adapter(std::string_view name, EncoderFactory factory);
void unregister_encoder_adapter(std::string_view name);

// Throws Error(kConfiguration) for unknown names, for pretrained names with
// no registered adapter, and for invalid dimensions.
std::unique_ptr<Encoder> make_encoder(const EncoderSpec& spec);

}  // namespace infotweet

#endif  // INFOTWEET_ENCODER_H_
