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

#ifndef INFOTWEET_ENSEMBLE_H_
#define INFOTWEET_ENSEMBLE_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infotweet/corpus.h"
#include "infotweet/label.h"
#include "infotweet/model.h"

namespace infotweet {

// Rows must sum to 1 within this tolerance.
inline constexpr double kRowSumTolerance = 1e-6;

// Class scores closer than this are a tie. Float summation order can move an
// exact tie by an ulp or two; this keeps the tie rule stable under model
// permutation.
inline constexpr double kTieTolerance = 1e-12;

// Per-example M x C matrix: one probability row per model.
struct ProbabilityMatrix {
  std::vector<std::string> model_ids;
  std::vector<ProbabilityRow> rows;

  std::size_t num_models() const { return rows.size(); }
};

// Throws Error(kArgument) if there are no rows or ids and rows disagree in
// count, and Error(kValidation) naming the model for a row with negative or
// non-finite entries or a sum off 1 by more than kRowSumTolerance.
void validate(const ProbabilityMatrix& pm);

// Argmax over classes; ties (within kTieTolerance) go to UNINFORMATIVE.
Label argmax_class(const ProbabilityRow& row);

struct AverageResult {
  Label label;
  ProbabilityRow mean;
};

AverageResult average_combine(const ProbabilityMatrix& pm);

struct VoteTally {
  std::array<std::size_t, kNumClasses> votes{};

  std::size_t operator[](Label c) const { return votes[to_index(c)]; }
  bool operator==(const VoteTally&) const = default;
};

enum class TiePath {
  kNone,
  kAveraging,
  kUninformativeDefault,
};

struct VoteResult {
  Label label;
  VoteTally tally;
  TiePath tie_path = TiePath::kNone;
};

// Majority over hard decisions in {0, 1}. On a tie, falls back to
// average_combine over `probs` when given (it must hold one row per
// decision), otherwise returns UNINFORMATIVE.
VoteResult vote_combine(std::span<const int> decisions,
                        const ProbabilityMatrix* probs = nullptr);

enum class Scheme { kAveraging, kVoting };

std::string_view scheme_name(Scheme scheme);
// Throws Error(kArgument) for anything but "averaging" / "voting".
Scheme parse_scheme(std::string_view name);

// One model's probability file: "id<TAB>p_uninformative<TAB>p_informative".
struct ModelProbabilities {
  std::string model_id;
  std::vector<std::string> ids;
  std::vector<ProbabilityRow> rows;
};

ModelProbabilities read_probability_file(const std::filesystem::path& path);
ModelProbabilities parse_probability_file(std::string_view contents,
                                          std::string model_id);
// Values are written in shortest round-trip form.
void write_probability_file(const ModelProbabilities& probs,
                            const std::filesystem::path& path);
std::string format_probability_file(const ModelProbabilities& probs);

// Applies `scheme` per example across models. A model's vote is the argmax of
// its row. Throws Error(kAlignment) naming the first position where the
// models' ids diverge.
std::vector<Prediction> combine_batch(std::span<const ModelProbabilities> models,
                                      Scheme scheme);

}  // namespace infotweet

#endif  // INFOTWEET_ENSEMBLE_H_
