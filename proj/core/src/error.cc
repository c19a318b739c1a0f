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

#include "infotweet/error.h"

#include <string>

namespace infotweet {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArgument: return "argument error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kLabel: return "label error";
    case ErrorCode::kMissingLabel: return "missing-label error";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kConfiguration: return "configuration error";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kDiverged: return "diverged";
    case ErrorCode::kAlignment: return "alignment error";
    case ErrorCode::kJoin: return "join error";
    case ErrorCode::kCheckpoint: return "checkpoint error";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace infotweet
