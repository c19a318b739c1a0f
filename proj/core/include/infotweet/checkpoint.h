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

#ifndef INFOTWEET_CHECKPOINT_H_
#define INFOTWEET_CHECKPOINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "infotweet/model.h"

namespace infotweet {

inline constexpr std::uint32_t kCheckpointFormatVersion = 1;

// Binary layout (all integers little-endian):
//
//   8 bytes   magic "INFOTWCK"
//   u32       format version
//   u64       header length L
//   L bytes   JSON header: encoder spec, tensor names and shapes
//   ...       payload: every tensor as IEEE-754 binary64, row-major, then
//             head weight, then head bias
//   u64       FNV-1a 64 over header and payload
//
// Doubles are stored by bit pattern, so a round trip is bit-exact.
std::string serialize_checkpoint(const ClassifierModel& model);

// Throws Error(kCheckpoint); every message carries the format version.
ClassifierModel deserialize_checkpoint(std::string_view bytes);

void save_checkpoint(const ClassifierModel& model,
                     const std::filesystem::path& path);
ClassifierModel load_checkpoint(const std::filesystem::path& path);

bool bitwise_equal(const ClassifierModel& a, const ClassifierModel& b);

}  // namespace infotweet

#endif  // INFOTWEET_CHECKPOINT_H_
