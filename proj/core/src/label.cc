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

#include "infotweet/label.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "infotweet/error.h"

namespace infotweet {

Label label_from_index(int index) {
  if (index != 0 && index != 1) {
    throw Error(ErrorCode::kArgument,
                "class index " + std::to_string(index) + " is not 0 or 1");
  }
  return static_cast<Label>(index);
}

std::string_view label_name(Label label) {
  return label == Label::kInformative ? "INFORMATIVE" : "UNINFORMATIVE";
}

std::optional<Label> parse_label(std::string_view text) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "INFORMATIVE") return Label::kInformative;
  if (upper == "UNINFORMATIVE") return Label::kUninformative;
  return std::nullopt;
}

}  // namespace infotweet
