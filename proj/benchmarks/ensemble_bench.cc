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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "infotweet/ensemble.h"

namespace infotweet {
namespace {

std::vector<ModelProbabilities> random_models(std::size_t models,
                                              std::size_t rows) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ModelProbabilities> out(models);
  for (std::size_t m = 0; m < models; ++m) {
    out[m].model_id = "m" + std::to_string(m);
    for (std::size_t i = 0; i < rows; ++i) {
      const double p = u(rng);
      out[m].ids.push_back(std::to_string(i));
      out[m].rows.push_back({1.0 - p, p});
    }
  }
  return out;
}

void BM_CombineBatch(benchmark::State& state) {
  const auto models = random_models(static_cast<std::size_t>(state.range(0)), 2000);
  const Scheme scheme = state.range(1) ? Scheme::kVoting : Scheme::kAveraging;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combine_batch(models, scheme));
  }
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_CombineBatch)->ArgsProduct({{1, 3, 7}, {0, 1}});

void BM_ParseProbabilityFile(benchmark::State& state) {
  const std::string text = format_probability_file(random_models(1, 2000)[0]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_probability_file(text, "m"));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseProbabilityFile);

}  // namespace
}  // namespace infotweet
