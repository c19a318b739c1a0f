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

#ifndef INFOTWEET_LABEL_H_
#define INFOTWEET_LABEL_H_

#include <optional>
#include <string_view>

namespace infotweet {

// Binary class set. The integer values are the class indices used by the
// probability rows and vote tallies.
enum class Label : int {
  kUninformative = 0,
  kInformative = 1,
};

inline constexpr int kNumClasses = 2;

constexpr int to_index(Label label) { return static_cast<int>(label); }

// Throws Error(kArgument) for indices outside {0, 1}.
Label label_from_index(int index);

// Uppercase canonical name, e.g. "INFORMATIVE".
std::string_view label_name(Label label);

// Case-insensitive, surrounding whitespace ignored. nullopt if unknown.
std::optional<Label> parse_label(std::string_view text);

}  // namespace infotweet

#endif  // INFOTWEET_LABEL_H_
