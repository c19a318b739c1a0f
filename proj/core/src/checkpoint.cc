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

#include "infotweet/checkpoint.h"

#include <bit>
#include <cstring>

#include <nlohmann/json.hpp>

#include "infotweet/corpus.h"
#include "infotweet/error.h"

namespace infotweet {
namespace {

using nlohmann::json;

constexpr std::string_view kMagic = "INFOTWCK";

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xffu);
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xffu);
}

void put_double(std::string& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kCheckpoint,
              what + " (checkpoint format version " +
                  std::to_string(kCheckpointFormatVersion) + ")");
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view take(std::size_t n) {
    if (bytes_.size() - pos_ < n) fail("checkpoint is truncated");
    std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint64_t u64() {
    std::string_view b = take(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
      v = (v << 8) | static_cast<unsigned char>(b[static_cast<std::size_t>(i)]);
    }
    return v;
  }
  std::uint32_t u32() {
    std::string_view b = take(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) {
      v = (v << 8) | static_cast<unsigned char>(b[static_cast<std::size_t>(i)]);
    }
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

json spec_to_json(const EncoderSpec& spec) {
  return {{"name", spec.name},
          {"hidden_dim", spec.hidden_dim},
          {"max_len", spec.max_len},
          {"vocab_size", spec.vocab_size},
          {"normalize_text", spec.normalize_text}};
}

EncoderSpec spec_from_json(const json& j) {
  EncoderSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.hidden_dim = j.at("hidden_dim").get<std::size_t>();
  spec.max_len = j.at("max_len").get<std::size_t>();
  spec.vocab_size = j.at("vocab_size").get<std::size_t>();
  spec.normalize_text = j.at("normalize_text").get<bool>();
  return spec;
}

}  // namespace

std::string serialize_checkpoint(const ClassifierModel& model) {
  json tensors = json::array();
  for (const auto& e : model.params.encoder.entries()) {
    tensors.push_back(
        {{"name", e.name}, {"rows", e.value.rows()}, {"cols", e.value.cols()}});
  }
  const json header = {{"encoder", spec_to_json(model.spec)},
                       {"tensors", tensors},
                       {"head_dim", model.params.head.weight.size()}};
  const std::string header_text = header.dump();

  std::string body = header_text;
  for (const auto& e : model.params.encoder.entries()) {
    for (Eigen::Index i = 0; i < e.value.size(); ++i) {
      put_double(body, e.value.data()[i]);
    }
  }
  for (Eigen::Index i = 0; i < model.params.head.weight.size(); ++i) {
    put_double(body, model.params.head.weight(i));
  }
  put_double(body, model.params.head.bias);

  std::string out(kMagic);
  put_u32(out, kCheckpointFormatVersion);
  put_u64(out, header_text.size());
  out += body;
  put_u64(out, fnv1a(body));
  return out;
}

ClassifierModel deserialize_checkpoint(std::string_view bytes) {
  Reader reader(bytes);
  if (bytes.size() < kMagic.size() || reader.take(kMagic.size()) != kMagic) {
    fail("not a checkpoint file: bad magic");
  }
  const std::uint32_t version = reader.u32();
  if (version != kCheckpointFormatVersion) {
    fail("unsupported format version " + std::to_string(version));
  }
  const std::uint64_t header_len = reader.u64();
  if (header_len > reader.remaining()) fail("checkpoint header is truncated");
  const std::size_t body_start = reader.pos();
  const std::string_view header_text =
      reader.take(static_cast<std::size_t>(header_len));

  ClassifierModel model;
  std::size_t head_dim = 0;
  try {
    const json header = json::parse(header_text);
    model.spec = spec_from_json(header.at("encoder"));
    for (const auto& t : header.at("tensors")) {
      const auto rows = t.at("rows").get<Eigen::Index>();
      const auto cols = t.at("cols").get<Eigen::Index>();
      if (rows < 0 || cols < 0 ||
          static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols) >
              reader.remaining() / 8) {
        fail("tensor shape exceeds payload");
      }
      model.params.encoder.add(t.at("name").get<std::string>(), rows, cols);
    }
    head_dim = header.at("head_dim").get<std::size_t>();
  } catch (const json::exception& e) {
    fail(std::string("malformed checkpoint header: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCheckpoint) throw;
    fail(std::string("malformed checkpoint header: ") + e.what());
  }

  for (auto& e : model.params.encoder.entries()) {
    for (Eigen::Index i = 0; i < e.value.size(); ++i) {
      e.value.data()[i] = reader.f64();
    }
  }
  if (head_dim > reader.remaining() / 8) fail("head exceeds payload");
  model.params.head.weight.resize(static_cast<Eigen::Index>(head_dim));
  for (std::size_t i = 0; i < head_dim; ++i) {
    model.params.head.weight(static_cast<Eigen::Index>(i)) = reader.f64();
  }
  model.params.head.bias = reader.f64();
  const std::size_t body_end = reader.pos();
  const std::uint64_t checksum = reader.u64();
  if (reader.remaining() != 0) fail("trailing bytes after checkpoint");
  if (checksum != fnv1a(bytes.substr(body_start, body_end - body_start))) {
    fail("checkpoint is corrupted: checksum mismatch");
  }
  return model;
}

void save_checkpoint(const ClassifierModel& model,
                     const std::filesystem::path& path) {
  write_file_atomically(path, serialize_checkpoint(model));
}

ClassifierModel load_checkpoint(const std::filesystem::path& path) {
  return deserialize_checkpoint(read_file(path));
}

bool bitwise_equal(const ClassifierModel& a, const ClassifierModel& b) {
  return a.spec == b.spec && bitwise_equal(a.params, b.params);
}

}  // namespace infotweet
