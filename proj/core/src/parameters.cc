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

#include "infotweet/parameters.h"

#include <cstring>
#include <utility>

#include "infotweet/error.h"

namespace infotweet {

Matrix& ParameterSet::add(std::string name, Eigen::Index rows,
                          Eigen::Index cols) {
  if (find(name) != nullptr) {
    throw Error(ErrorCode::kArgument, "duplicate parameter '" + name + "'");
  }
  entries_.push_back({std::move(name), Matrix::Zero(rows, cols)});
  return entries_.back().value;
}

const Matrix* ParameterSet::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e.value;
  }
  return nullptr;
}

const Matrix& ParameterSet::at(std::string_view name) const {
  const Matrix* m = find(name);
  if (m == nullptr) {
    throw Error(ErrorCode::kConfiguration,
                "missing parameter '" + std::string(name) + "'");
  }
  return *m;
}

Matrix& ParameterSet::at(std::string_view name) {
  return const_cast<Matrix&>(std::as_const(*this).at(name));
}

std::size_t ParameterSet::parameter_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += static_cast<std::size_t>(e.value.size());
  return n;
}

ParameterSet ParameterSet::zeros_like() const {
  ParameterSet out;
  for (const auto& e : entries_) out.add(e.name, e.value.rows(), e.value.cols());
  return out;
}

void ParameterSet::set_zero() {
  for (auto& e : entries_) e.value.setZero();
}

bool ParameterSet::same_layout(const ParameterSet& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other.entries_[i];
    if (a.name != b.name || a.value.rows() != b.value.rows() ||
        a.value.cols() != b.value.cols()) {
      return false;
    }
  }
  return true;
}

bool bitwise_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::memcmp(a.data(), b.data(),
                     static_cast<std::size_t>(a.size()) * sizeof(double)) == 0;
}

bool bitwise_equal(const ParameterSet& a, const ParameterSet& b) {
  if (!a.same_layout(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bitwise_equal(a.entries()[i].value, b.entries()[i].value)) {
      return false;
    }
  }
  return true;
}

}  // namespace infotweet
