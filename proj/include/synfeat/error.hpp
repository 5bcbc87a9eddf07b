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

#ifndef SYNFEAT_ERROR_HPP_
#define SYNFEAT_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace synfeat {

enum class ErrorCode {
  kParse,            // malformed bracketed tree or treebank stream
  kLabel,            // label missing from an inventory, bad inventory file
  kLexicon,          // malformed lexicon, out-of-vocabulary word
  kRange,            // word index or node id out of range
  kDimension,        // matrix shape mismatch
  kIo,               // file system failure
  kInvalidArgument,  // anything else the caller got wrong
};

const char* to_string(ErrorCode code);

// All failures raised by the library. Parse errors carry the character
// offset into the input text where the problem was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace synfeat

#endif  // SYNFEAT_ERROR_HPP_
