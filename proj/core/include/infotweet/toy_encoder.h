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

#ifndef INFOTWEET_TOY_ENCODER_H_
#define INFOTWEET_TOY_ENCODER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "infotweet/encoder.h"

namespace infotweet {

// Small trainable Transformer-style encoder for desk-scale runs:
//
//   x_i = E[id(token_i)] + P_i                  (hashed embedding + sinusoid)
//   A   = softmax((X Wq)(X Wk)^T / sqrt(d))     (row-wise)
//   H   = X + (A X Wv) Wo
//
// Token ids are FNV-1a hashes into [2, vocab_size); ids 0 and 1 are reserved
// for the bos and eos markers.
class ToyEncoder final : public Encoder {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";

  // Throws Error(kConfiguration) for hidden_dim == 0 or vocab_size < 3.
  explicit ToyEncoder(EncoderSpec spec);

  const EncoderSpec& spec() const override { return spec_; }
  std::string_view bos_token() const override { return kBos; }
  std::string_view eos_token() const override { return kEos; }

  // Lowercased whitespace split.
  std::vector<std::string> tokenize(std::string_view text) const override;

  ParameterSet init_params(std::uint64_t seed) const override;
  void check_params(const ParameterSet& params) const override;

  ContextualEncoding encode(const TokenSequence& seq,
                            const ParameterSet& params) const override;

  Vector backprop_first(const TokenSequence& seq, const ParameterSet& params,
                        const PooledGradientFn& upstream,
                        ParameterSet& grads) const override;

  std::size_t token_id(std::string_view token) const;

  // Fixed sinusoidal position signal for positions [0, n).
  Matrix position_signal(std::size_t n) const;

 private:
  Matrix embed(const TokenSequence& seq, const ParameterSet& params,
               std::vector<std::size_t>* ids) const;

  EncoderSpec spec_;
};

}  // namespace infotweet

#endif  // INFOTWEET_TOY_ENCODER_H_
