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

#ifndef INFOTWEET_METRICS_H_
#define INFOTWEET_METRICS_H_

#include <cstddef>
#include <span>
#include <string>

#include "infotweet/label.h"

namespace infotweet {

// Confusion counts with INFORMATIVE as the positive class.
struct EvaluationReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const EvaluationReport&) const = default;
};

// Undefined ratios are reported as 0. Throws Error(kArgument) for empty or
// unequal-length inputs.
EvaluationReport evaluate(std::span<const Label> gold,
                          std::span<const Label> pred);

// "P=0.5000 R=0.5000 F1=0.5000"
std::string format_report(const EvaluationReport& report);

// Single-line JSON object with counts and ratios.
std::string report_to_json(const EvaluationReport& report);

}  // namespace infotweet

#endif  // INFOTWEET_METRICS_H_
