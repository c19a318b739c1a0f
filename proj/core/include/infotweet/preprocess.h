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

#ifndef INFOTWEET_PREPROCESS_H_
#define INFOTWEET_PREPROCESS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infotweet {

inline constexpr std::size_t kDefaultMaxLen = 128;

// Rewrites a raw tweet into the form tweet-domain encoders were trained on:
//   @handle               -> @USER
//   http://, https://, www. prefixed spans -> HTTPURL
//   whitespace runs       -> single space, ends trimmed
// Idempotent, and never emits tab or newline characters.
std::string normalize(std::string_view text);

// A framed token sequence: bos, content tokens, eos.
class TokenSequence {
 public:
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  bool operator==(const TokenSequence&) const = default;

 private:
  friend TokenSequence frame(std::span<const std::string>, std::size_t,
                             std::string_view, std::string_view);
  std::vector<std::string> tokens_;
};

// [bos] + first (max_len - 2) tokens + [eos]. Throws Error(kArgument) when
// max_len < 2.
TokenSequence frame(std::span<const std::string> tokens, std::size_t max_len,
                    std::string_view bos, std::string_view eos);

}  // namespace infotweet

#endif  // INFOTWEET_PREPROCESS_H_
