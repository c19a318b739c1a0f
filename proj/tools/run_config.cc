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

#include "run_config.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <vector>

#include "infotweet/corpus.h"
#include "infotweet/error.h"

namespace infotweet::cli {
namespace {

const std::set<std::string, std::less<>>& known_keys() {
  static const std::set<std::string, std::less<>> keys = {
      "train",      "valid",          "test",   "output_dir",
      "encoder",    "hidden_dim",     "max_len", "vocab_size",
      "normalize",  "batch_size",     "learning_rates", "epochs",
      "weight_decay", "seed",         "toy_lr_multiplier",
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void invalid(const std::string& key, std::string_view value,
                          std::string_view expected) {
  throw Error(ErrorCode::kValidation, "key '" + key + "': '" +
                                          std::string(value) + "' is not " +
                                          std::string(expected));
}

std::size_t parse_size(const std::string& key, std::string_view v) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    invalid(key, v, "a non-negative integer");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    invalid(key, v, "a non-negative integer");
  }
  return out;
}

double parse_real(const std::string& key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    invalid(key, v, "a number");
  }
  return out;
}

bool parse_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  invalid(key, v, "a boolean");
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

double RunConfig::effective_lr_scale() const {
  return encoder.name == kToyEncoderName ? toy_lr_multiplier : 1.0;
}

RunConfig parse_run_config(std::string_view text,
                           const std::filesystem::path& base_dir) {
  std::map<std::string, std::string, std::less<>> values;
  std::vector<std::string> unknown;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kValidation,
                  "config line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!known_keys().contains(key)) {
      unknown.push_back(key);
      continue;
    }
    if (values.contains(key)) {
      throw Error(ErrorCode::kValidation, "key '" + key + "' given twice");
    }
    values.emplace(std::move(key), std::move(value));
  }
  if (!unknown.empty()) {
    std::string list;
    for (const auto& k : unknown) list += (list.empty() ? "" : ", ") + k;
    throw Error(ErrorCode::kValidation, "unknown config key(s): " + list);
  }

  auto path_of = [&](const std::string& v) {
    std::filesystem::path p(v);
    return p.is_absolute() ? p : base_dir / p;
  };

  RunConfig config;
  for (const char* required : {"train", "valid", "output_dir"}) {
    if (!values.contains(required)) {
      throw Error(ErrorCode::kValidation,
                  "missing required key '" + std::string(required) + "'");
    }
  }
  for (const auto& [key, v] : values) {
    if (key == "train") {
      config.train = path_of(v);
    } else if (key == "valid") {
      config.valid = path_of(v);
    } else if (key == "test") {
      config.test = path_of(v);
    } else if (key == "output_dir") {
      config.output_dir = path_of(v);
    } else if (key == "encoder") {
      config.encoder.name = v;
    } else if (key == "hidden_dim") {
      config.encoder.hidden_dim = parse_size(key, v);
    } else if (key == "max_len") {
      config.encoder.max_len = parse_size(key, v);
    } else if (key == "vocab_size") {
      config.encoder.vocab_size = parse_size(key, v);
    } else if (key == "normalize") {
      config.encoder.normalize_text = parse_bool(key, v);
    } else if (key == "batch_size") {
      config.training.batch_size = parse_size(key, v);
    } else if (key == "learning_rates") {
      config.training.learning_rates.clear();
      std::string_view rest = v;
      while (true) {
        const std::size_t comma = rest.find(',');
        config.training.learning_rates.push_back(
            parse_real(key, trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } else if (key == "epochs") {
      config.training.epochs = parse_size(key, v);
    } else if (key == "weight_decay") {
      config.training.weight_decay = parse_real(key, v);
    } else if (key == "seed") {
      config.training.seed = parse_u64(key, v);
    } else if (key == "toy_lr_multiplier") {
      config.toy_lr_multiplier = parse_real(key, v);
    }
  }
  config.training.max_len = config.encoder.max_len;
  config.training.lr_scale = config.effective_lr_scale();

  if (!is_known_encoder(config.encoder.name)) {
    throw Error(ErrorCode::kValidation,
                "key 'encoder': unknown encoder '" + config.encoder.name + "'");
  }
  if (config.encoder.hidden_dim == 0) {
    throw Error(ErrorCode::kValidation, "key 'hidden_dim' must be positive");
  }
  config.training.validate();
  for (const auto* p : {&config.train, &config.valid}) {
    if (!std::filesystem::exists(*p)) {
      throw Error(ErrorCode::kValidation,
                  "input path '" + p->string() + "' does not exist");
    }
  }
  if (config.test && !std::filesystem::exists(*config.test)) {
    throw Error(ErrorCode::kValidation,
                "input path '" + config.test->string() + "' does not exist");
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path), path.parent_path());
}

std::string format_run_config(const RunConfig& config) {
  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out += std::string(key) + " = " + value + "\n";
  };
  put("train", config.train.string());
  put("valid", config.valid.string());
  if (config.test) put("test", config.test->string());
  put("output_dir", config.output_dir.string());
  put("encoder", config.encoder.name);
  put("hidden_dim", std::to_string(config.encoder.hidden_dim));
  put("max_len", std::to_string(config.encoder.max_len));
  put("vocab_size", std::to_string(config.encoder.vocab_size));
  put("normalize", config.encoder.normalize_text ? "true" : "false");
  put("batch_size", std::to_string(config.training.batch_size));
  std::string lrs;
  for (double lr : config.training.learning_rates) {
    lrs += (lrs.empty() ? "" : ",") + format_real(lr);
  }
  put("learning_rates", lrs);
  put("epochs", std::to_string(config.training.epochs));
  put("weight_decay", format_real(config.training.weight_decay));
  put("seed", std::to_string(config.training.seed));
  put("toy_lr_multiplier", format_real(config.toy_lr_multiplier));
  return out;
}

}  // namespace infotweet::cli
