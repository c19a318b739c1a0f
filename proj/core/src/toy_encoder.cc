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

#include "infotweet/toy_encoder.h"

#include <cctype>
#include <cmath>
#include <random>

#include "infotweet/error.h"

namespace infotweet {
namespace {

constexpr std::size_t kBosId = 0;
constexpr std::size_t kEosId = 1;
constexpr std::size_t kReservedIds = 2;

constexpr std::string_view kEmbedding = "embedding";
constexpr std::string_view kQuery = "query";
constexpr std::string_view kKey = "key";
constexpr std::string_view kValue = "value";
constexpr std::string_view kOutput = "output";

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Row-wise softmax, max-shifted.
void softmax_rows(Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    row.array() -= row.maxCoeff();
    row = row.array().exp().matrix();
    row /= row.sum();
  }
}

}  // namespace

ToyEncoder::ToyEncoder(EncoderSpec spec) : spec_(std::move(spec)) {
  if (spec_.hidden_dim == 0) {
    throw Error(ErrorCode::kConfiguration, "toy encoder: hidden_dim is 0");
  }
  if (spec_.vocab_size <= kReservedIds) {
    throw Error(ErrorCode::kConfiguration,
                "toy encoder: vocab_size must exceed " +
                    std::to_string(kReservedIds));
  }
}

std::vector<std::string> ToyEncoder::tokenize(std::string_view text) const {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::size_t ToyEncoder::token_id(std::string_view token) const {
  if (token == kBos) return kBosId;
  if (token == kEos) return kEosId;
  return kReservedIds + fnv1a(token) % (spec_.vocab_size - kReservedIds);
}

Matrix ToyEncoder::position_signal(std::size_t n) const {
  const auto d = static_cast<Eigen::Index>(spec_.hidden_dim);
  Matrix p(static_cast<Eigen::Index>(n), d);
  for (Eigen::Index pos = 0; pos < p.rows(); ++pos) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double rate =
          std::pow(10000.0, static_cast<double>(i - i % 2) / static_cast<double>(d));
      const double angle = static_cast<double>(pos) / rate;
      p(pos, i) = (i % 2 == 0) ? std::sin(angle) : std::cos(angle);
    }
  }
  return p;
}

ParameterSet ToyEncoder::init_params(std::uint64_t seed) const {
  const auto d = static_cast<Eigen::Index>(spec_.hidden_dim);
  const auto v = static_cast<Eigen::Index>(spec_.vocab_size);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x70u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> embed_dist(0.0, 0.5);
  std::normal_distribution<double> proj_dist(0.0,
                                             1.0 / std::sqrt(static_cast<double>(d)));

  ParameterSet params;
  Matrix& embedding = params.add(std::string(kEmbedding), v, d);
  for (Eigen::Index i = 0; i < embedding.size(); ++i) {
    embedding.data()[i] = embed_dist(rng);
  }
  for (std::string_view name : {kQuery, kKey, kValue, kOutput}) {
    Matrix& w = params.add(std::string(name), d, d);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = proj_dist(rng);
  }
  return params;
}

void ToyEncoder::check_params(const ParameterSet& params) const {
  const auto d = static_cast<Eigen::Index>(spec_.hidden_dim);
  const auto v = static_cast<Eigen::Index>(spec_.vocab_size);
  auto expect = [&](std::string_view name, Eigen::Index rows,
                    Eigen::Index cols) {
    const Matrix* m = params.find(name);
    if (m == nullptr) {
      throw Error(ErrorCode::kConfiguration,
                  "toy encoder: missing parameter '" + std::string(name) + "'");
    }
    if (m->rows() != rows || m->cols() != cols) {
      throw Error(ErrorCode::kConfiguration,
                  "toy encoder: parameter '" + std::string(name) +
                      "' has shape " + std::to_string(m->rows()) + "x" +
                      std::to_string(m->cols()) + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }
  };
  expect(kEmbedding, v, d);
  for (std::string_view name : {kQuery, kKey, kValue, kOutput}) {
    expect(name, d, d);
  }
  if (params.size() != 5) {
    throw Error(ErrorCode::kConfiguration,
                "toy encoder: expected 5 parameter tensors, got " +
                    std::to_string(params.size()));
  }
}

Matrix ToyEncoder::embed(const TokenSequence& seq, const ParameterSet& params,
                         std::vector<std::size_t>* ids) const {
  const Matrix& embedding = params.at(kEmbedding);
  Matrix x = position_signal(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::size_t id = token_id(seq[i]);
    x.row(static_cast<Eigen::Index>(i)) +=
        embedding.row(static_cast<Eigen::Index>(id));
    if (ids != nullptr) ids->push_back(id);
  }
  return x;
}

ContextualEncoding ToyEncoder::encode(const TokenSequence& seq,
                                      const ParameterSet& params) const {
  check_params(params);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec_.hidden_dim));
  const Matrix x = embed(seq, params, nullptr);
  const Matrix q = x * params.at(kQuery);
  const Matrix k = x * params.at(kKey);
  const Matrix v = x * params.at(kValue);
  Matrix attn = (q * k.transpose()) * scale;
  softmax_rows(attn);
  ContextualEncoding out;
  out.vectors = x + (attn * v) * params.at(kOutput);
  return out;
}

Vector ToyEncoder::backprop_first(const TokenSequence& seq,
                                  const ParameterSet& params,
                                  const PooledGradientFn& upstream,
                                  ParameterSet& grads) const {
  check_params(params);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec_.hidden_dim));
  const Matrix& wq = params.at(kQuery);
  const Matrix& wk = params.at(kKey);
  const Matrix& wv = params.at(kValue);
  const Matrix& wo = params.at(kOutput);

  std::vector<std::size_t> ids;
  const Matrix x = embed(seq, params, &ids);
  const Vector x0 = x.row(0).transpose();
  const Vector q0 = wq.transpose() * x0;
  const Matrix k = x * wk;
  const Matrix v = x * wv;

  Vector a = (k * q0) * scale;
  a.array() -= a.maxCoeff();
  a = a.array().exp().matrix();
  a /= a.sum();

  const Vector u = v.transpose() * a;
  const Vector h1 = x0 + wo.transpose() * u;

  const Vector g = upstream(h1);

  // o = u Wo
  grads.at(kOutput).noalias() += u * g.transpose();
  const Vector du = wo * g;

  // u = sum_j a_j v_j; a = softmax(s)
  const Vector da = v * du;
  const Vector ds = a.array() * (da.array() - a.dot(da));

  const Matrix dv = a * du.transpose();
  const Matrix dk = (ds * q0.transpose()) * scale;
  const Vector dq0 = (k.transpose() * ds) * scale;

  grads.at(kValue).noalias() += x.transpose() * dv;
  grads.at(kKey).noalias() += x.transpose() * dk;
  grads.at(kQuery).noalias() += x0 * dq0.transpose();

  Matrix dx = dv * wv.transpose() + dk * wk.transpose();
  dx.row(0) += (wq * dq0 + g).transpose();

  Matrix& dembedding = grads.at(kEmbedding);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    dembedding.row(static_cast<Eigen::Index>(ids[i])) +=
        dx.row(static_cast<Eigen::Index>(i));
  }
  return h1;
}

}  // namespace infotweet
