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

#include "infotweet/metrics.h"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "infotweet/error.h"

namespace infotweet {

EvaluationReport evaluate(std::span<const Label> gold,
                          std::span<const Label> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kArgument,
                "evaluate: " + std::to_string(gold.size()) + " gold labels but " +
                    std::to_string(pred.size()) + " predictions");
  }
  if (gold.empty()) {
    throw Error(ErrorCode::kArgument, "evaluate: no examples");
  }
  EvaluationReport r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == Label::kInformative;
    const bool p = pred[i] == Label::kInformative;
    if (g && p) {
      ++r.tp;
    } else if (p) {
      ++r.fp;
    } else if (g) {
      ++r.fn;
    } else {
      ++r.tn;
    }
  }
  if (r.tp + r.fp > 0) {
    r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
  }
  if (r.tp + r.fn > 0) {
    r.recall = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
  }
  if (r.precision + r.recall > 0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

std::string format_report(const EvaluationReport& report) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "P=%.4f R=%.4f F1=%.4f", report.precision,
                report.recall, report.f1);
  return buf;
}

std::string report_to_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["tp"] = report.tp;
  j["fp"] = report.fp;
  j["fn"] = report.fn;
  j["tn"] = report.tn;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  return j.dump();
}

}  // namespace infotweet
