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

#include "infotweet/optimizer.h"

#include <cmath>

#include "infotweet/error.h"

namespace infotweet {

AdamW::AdamW(const ModelParameters& like, AdamWOptions options)
    : options_(options) {
  for (std::span<const double> view : flat_views(like)) {
    first_moment_.emplace_back(view.size(), 0.0);
    second_moment_.emplace_back(view.size(), 0.0);
  }
}

void AdamW::step(ModelParameters& params, const ModelParameters& grads) {
  std::vector<std::span<double>> p = flat_views(params);
  std::vector<std::span<const double>> g = flat_views(grads);
  if (p.size() != first_moment_.size() || g.size() != p.size()) {
    throw Error(ErrorCode::kArgument, "AdamW: parameter layout changed");
  }
  ++steps_;
  const double t = static_cast<double>(steps_);
  const double bias1 = 1.0 - std::pow(options_.beta1, t);
  const double bias2 = 1.0 - std::pow(options_.beta2, t);
  const double decay = 1.0 - options_.lr * options_.weight_decay;

  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].size() != g[k].size() || p[k].size() != first_moment_[k].size()) {
      throw Error(ErrorCode::kArgument, "AdamW: parameter layout changed");
    }
    std::vector<double>& m = first_moment_[k];
    std::vector<double>& v = second_moment_[k];
    for (std::size_t i = 0; i < p[k].size(); ++i) {
      const double gi = g[k][i];
      m[i] = options_.beta1 * m[i] + (1.0 - options_.beta1) * gi;
      v[i] = options_.beta2 * v[i] + (1.0 - options_.beta2) * gi * gi;
      const double m_hat = m[i] / bias1;
      const double v_hat = v[i] / bias2;
      p[k][i] = p[k][i] * decay -
                options_.lr * m_hat / (std::sqrt(v_hat) + options_.eps);
    }
  }
}

}  // namespace infotweet
