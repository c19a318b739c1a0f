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

#ifndef INFOTWEET_PARAMETERS_H_
#define INFOTWEET_PARAMETERS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace infotweet {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Ordered collection of named dense tensors. Order is insertion order and is
// part of the checkpoint layout.
class ParameterSet {
 public:
  struct Entry {
    std::string name;
    Matrix value;
  };

  // Adds a zero-filled tensor. Throws Error(kArgument) on duplicate names.
  Matrix& add(std::string name, Eigen::Index rows, Eigen::Index cols);

  // Throws Error(kConfiguration) if the tensor does not exist.
  Matrix& at(std::string_view name);
  const Matrix& at(std::string_view name) const;
  const Matrix* find(std::string_view name) const;

  std::span<Entry> entries() { return entries_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t parameter_count() const;

  ParameterSet zeros_like() const;
  void set_zero();
  bool same_layout(const ParameterSet& other) const;

 private:
  std::vector<Entry> entries_;
};

// Compares bit patterns, so -0.0 != 0.0 and identical NaNs compare equal.
bool bitwise_equal(const Matrix& a, const Matrix& b);
bool bitwise_equal(const ParameterSet& a, const ParameterSet& b);

}  // namespace infotweet

#endif  // INFOTWEET_PARAMETERS_H_
