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

#include "infotweet/preprocess.h"

#include <algorithm>
#include <cctype>

#include "infotweet/error.h"

namespace infotweet {
namespace {

bool is_handle_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) {
      return false;
    }
  }
  return true;
}

bool url_starts_at(std::string_view s) {
  return starts_with_icase(s, "http://") || starts_with_icase(s, "https://") ||
         starts_with_icase(s, "www.");
}

// Rewrites one whitespace-free word. A mention or URL must start at the word
// start or right after a non-handle character; a URL runs to the word end.
// Replacements end in a handle character just like what they replace, so
// boundaries seen by a second pass are unchanged.
void rewrite_word(std::string_view word, std::string& out) {
  std::size_t i = 0;
  while (i < word.size()) {
    const bool at_boundary = i == 0 || !is_handle_char(word[i - 1]);
    if (at_boundary && url_starts_at(word.substr(i))) {
      out += "HTTPURL";
      return;
    }
    if (at_boundary && word[i] == '@' && i + 1 < word.size() &&
        is_handle_char(word[i + 1])) {
      std::size_t end = i + 1;
      while (end < word.size() && is_handle_char(word[end])) ++end;
      out += "@USER";
      i = end;
      continue;
    }
    out += word[i];
    ++i;
  }
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      if (!out.empty()) out += ' ';
      rewrite_word(text.substr(start, i - start), out);
    }
  }
  return out;
}

TokenSequence frame(std::span<const std::string> tokens, std::size_t max_len,
                    std::string_view bos, std::string_view eos) {
  if (max_len < 2) {
    throw Error(ErrorCode::kArgument,
                "frame: max_len must be at least 2, got " +
                    std::to_string(max_len));
  }
  const std::size_t keep = std::min(tokens.size(), max_len - 2);
  TokenSequence seq;
  seq.tokens_.reserve(keep + 2);
  seq.tokens_.emplace_back(bos);
  seq.tokens_.insert(seq.tokens_.end(), tokens.begin(), tokens.begin() + keep);
  seq.tokens_.emplace_back(eos);
  return seq;
}

}  // namespace infotweet
