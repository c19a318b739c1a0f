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

#include "infotweet/ensemble.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "infotweet/error.h"

namespace infotweet {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view s, const std::string& where) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse,
                where + ": '" + std::string(s) + "' is not a number");
  }
  return v;
}

}  // namespace

void validate(const ProbabilityMatrix& pm) {
  if (pm.rows.empty()) {
    throw Error(ErrorCode::kArgument, "ensemble: no models");
  }
  if (!pm.model_ids.empty() && pm.model_ids.size() != pm.rows.size()) {
    throw Error(ErrorCode::kArgument, "ensemble: model ids and rows differ");
  }
  for (std::size_t m = 0; m < pm.rows.size(); ++m) {
    const ProbabilityRow& row = pm.rows[m];
    double sum = 0.0;
    bool ok = true;
    for (double p : row) {
      ok = ok && std::isfinite(p) && p >= 0.0;
      sum += p;
    }
    if (!ok || std::abs(sum - 1.0) > kRowSumTolerance) {
      const std::string name =
          pm.model_ids.empty() ? "#" + std::to_string(m) : pm.model_ids[m];
      throw Error(ErrorCode::kValidation,
                  "model '" + name + "' row [" + format_double(row[0]) + ", " +
                      format_double(row[1]) + "] is not a probability vector");
    }
  }
}

Label argmax_class(const ProbabilityRow& row) {
  return row[1] - row[0] > kTieTolerance ? Label::kInformative
                                         : Label::kUninformative;
}

AverageResult average_combine(const ProbabilityMatrix& pm) {
  validate(pm);
  ProbabilityRow mean{0.0, 0.0};
  for (const ProbabilityRow& row : pm.rows) {
    for (int c = 0; c < kNumClasses; ++c) mean[c] += row[c];
  }
  const auto m = static_cast<double>(pm.rows.size());
  for (double& v : mean) v /= m;
  return {argmax_class(mean), mean};
}

VoteResult vote_combine(std::span<const int> decisions,
                        const ProbabilityMatrix* probs) {
  if (decisions.empty()) {
    throw Error(ErrorCode::kArgument, "vote_combine: no decisions");
  }
  VoteResult result;
  for (int d : decisions) {
    if (d != 0 && d != 1) {
      throw Error(ErrorCode::kArgument,
                  "vote_combine: decision " + std::to_string(d) +
                      " is not 0 or 1");
    }
    ++result.tally.votes[static_cast<std::size_t>(d)];
  }
  const std::size_t v0 = result.tally.votes[0];
  const std::size_t v1 = result.tally.votes[1];
  if (v0 != v1) {
    result.label = v1 > v0 ? Label::kInformative : Label::kUninformative;
    return result;
  }
  if (probs != nullptr) {
    if (probs->num_models() != decisions.size()) {
      throw Error(ErrorCode::kArgument,
                  "vote_combine: " + std::to_string(decisions.size()) +
                      " decisions but " + std::to_string(probs->num_models()) +
                      " probability rows");
    }
    result.label = average_combine(*probs).label;
    result.tie_path = TiePath::kAveraging;
  } else {
    result.label = Label::kUninformative;
    result.tie_path = TiePath::kUninformativeDefault;
  }
  return result;
}

std::string_view scheme_name(Scheme scheme) {
  return scheme == Scheme::kAveraging ? "averaging" : "voting";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "averaging") return Scheme::kAveraging;
  if (name == "voting") return Scheme::kVoting;
  throw Error(ErrorCode::kArgument,
              "unknown ensemble scheme '" + std::string(name) +
                  "' (expected averaging or voting)");
}

ModelProbabilities parse_probability_file(std::string_view contents,
                                          std::string model_id) {
  ModelProbabilities out;
  out.model_id = std::move(model_id);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const std::string where = out.model_id + ": line " + std::to_string(line_no);
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos ||
        line.find('\t', t2 + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  where + ": expected id<TAB>p_uninformative<TAB>p_informative");
    }
    out.ids.emplace_back(line.substr(0, t1));
    out.rows.push_back(
        {parse_double(line.substr(t1 + 1, t2 - t1 - 1), where),
         parse_double(line.substr(t2 + 1), where)});
  }
  return out;
}

ModelProbabilities read_probability_file(const std::filesystem::path& path) {
  return parse_probability_file(read_file(path), path.string());
}

std::string format_probability_file(const ModelProbabilities& probs) {
  if (probs.ids.size() != probs.rows.size()) {
    throw Error(ErrorCode::kArgument, "probability file: ids and rows differ");
  }
  std::string out;
  for (std::size_t i = 0; i < probs.ids.size(); ++i) {
    out += probs.ids[i];
    out += '\t';
    out += format_double(probs.rows[i][0]);
    out += '\t';
    out += format_double(probs.rows[i][1]);
    out += '\n';
  }
  return out;
}

void write_probability_file(const ModelProbabilities& probs,
                            const std::filesystem::path& path) {
  write_file_atomically(path, format_probability_file(probs));
}

std::vector<Prediction> combine_batch(std::span<const ModelProbabilities> models,
                                      Scheme scheme) {
  if (models.empty()) {
    throw Error(ErrorCode::kArgument, "combine_batch: no models");
  }
  for (const auto& m : models) {
    if (m.ids.size() != m.rows.size()) {
      throw Error(ErrorCode::kArgument,
                  "model '" + m.model_id + "': ids and rows differ in count");
    }
  }
  const ModelProbabilities& ref = models.front();
  for (std::size_t m = 1; m < models.size(); ++m) {
    const ModelProbabilities& other = models[m];
    const std::size_t common = std::min(ref.ids.size(), other.ids.size());
    std::size_t pos = 0;
    while (pos < common && ref.ids[pos] == other.ids[pos]) ++pos;
    if (pos < common || ref.ids.size() != other.ids.size()) {
      const std::string a = pos < ref.ids.size() ? ref.ids[pos] : "<end>";
      const std::string b = pos < other.ids.size() ? other.ids[pos] : "<end>";
      throw Error(ErrorCode::kAlignment,
                  "id position " + std::to_string(pos) + ": '" + a + "' in " +
                      ref.model_id + " vs '" + b + "' in " + other.model_id);
    }
  }

  std::vector<Prediction> out;
  out.reserve(ref.ids.size());
  ProbabilityMatrix pm;
  for (const auto& m : models) pm.model_ids.push_back(m.model_id);
  std::vector<int> decisions(models.size());
  for (std::size_t i = 0; i < ref.ids.size(); ++i) {
    pm.rows.clear();
    for (std::size_t m = 0; m < models.size(); ++m) {
      pm.rows.push_back(models[m].rows[i]);
      decisions[m] = to_index(argmax_class(models[m].rows[i]));
    }
    Label label;
    try {
      label = scheme == Scheme::kAveraging
                  ? average_combine(pm).label
                  : vote_combine(decisions, &pm).label;
    } catch (const Error& e) {
      throw Error(e.code(), "id '" + ref.ids[i] + "': " + e.message());
    }
    out.push_back({ref.ids[i], label});
  }
  return out;
}

}  // namespace infotweet
