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

#include "infotweet/encoder.h"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>

#include "infotweet/error.h"
#include "infotweet/toy_encoder.h"

namespace infotweet {
namespace {

constexpr std::array<std::string_view, 8> kKnownNames = {
    "toy",          "bertweet",         "roberta-base",
    "roberta-large", "xlm-roberta-base", "xlm-roberta-large",
    "electra-base", "electra-large",
};

struct AdapterRegistry {
  std::mutex mu;
  std::map<std::string, EncoderFactory, std::less<>> factories;
};

AdapterRegistry& registry() {
  static AdapterRegistry r;
  return r;
}

}  // namespace

std::span<const std::string_view> known_encoder_names() { return kKnownNames; }

bool is_known_encoder(std::string_view name) {
  return std::find(kKnownNames.begin(), kKnownNames.end(), name) !=
         kKnownNames.end();
}

void register_encoder_adapter(std::string_view name, EncoderFactory factory) {
  if (!is_known_encoder(name) || name == kToyEncoderName) {
    throw Error(ErrorCode::kArgument,
                "cannot register an adapter for '" + std::string(name) + "'");
  }
  auto& r = registry();
  std::lock_guard lock(r.mu);
  r.factories[std::string(name)] = std::move(factory);
}

void unregister_encoder_adapter(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.factories.find(name); it != r.factories.end()) {
    r.factories.erase(it);
  }
}

std::unique_ptr<Encoder> make_encoder(const EncoderSpec& spec) {
  if (!is_known_encoder(spec.name)) {
    throw Error(ErrorCode::kConfiguration,
                "unknown encoder '" + spec.name + "'");
  }
  if (spec.hidden_dim == 0) {
    throw Error(ErrorCode::kConfiguration, "hidden_dim must be positive");
  }
  if (spec.max_len < 2) {
    throw Error(ErrorCode::kConfiguration, "max_len must be at least 2");
  }
  if (spec.name == kToyEncoderName) return std::make_unique<ToyEncoder>(spec);

  EncoderFactory factory;
  {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    if (auto it = r.factories.find(spec.name); it != r.factories.end()) {
      factory = it->second;
    }
  }
  if (!factory) {
    throw Error(ErrorCode::kConfiguration,
                "encoder '" + spec.name +
                    "' needs an external adapter and none is registered");
  }
  std::unique_ptr<Encoder> encoder = factory(spec);
  if (!encoder || encoder->spec().hidden_dim != spec.hidden_dim) {
    throw Error(ErrorCode::kConfiguration,
                "adapter for '" + spec.name + "' does not honor hidden_dim");
  }
  return encoder;
}

}  // namespace infotweet
