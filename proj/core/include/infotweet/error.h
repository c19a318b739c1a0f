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

#ifndef INFOTWEET_ERROR_H_
#define INFOTWEET_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace infotweet {

enum class ErrorCode {
  kArgument,
  kParse,
  kLabel,
  kMissingLabel,
  kIo,
  kConfiguration,
  kValidation,
  kDiverged,
  kAlignment,
  kJoin,
  kCheckpoint,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace infotweet

#endif  // INFOTWEET_ERROR_H_
