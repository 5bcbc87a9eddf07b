// Copyright 2026 The synfeat Authors. All Rights Reserved.
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

#include "synfeat/error.hpp"

namespace synfeat {

namespace {

std::string with_offset(const std::string& message,
                        std::optional<std::size_t> offset) {
  if (!offset) return message;
  return message + " (at offset " + std::to_string(*offset) + ")";
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kLabel: return "label error";
    case ErrorCode::kLexicon: return "lexicon error";
    case ErrorCode::kRange: return "range error";
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(with_offset(message, offset)),
      code_(code),
      offset_(offset) {}

}  // namespace synfeat
