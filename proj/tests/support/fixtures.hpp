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

#ifndef SYNFEAT_TESTS_SUPPORT_FIXTURES_HPP_
#define SYNFEAT_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <string_view>

namespace synfeat::testing {

// Reference sentence: "The two wayward boys like eating apples quickly ."
//
//   S
//   |-- NP: (DT The) (JJ two) (JJ wayward) (NNS boys)            words 1-4
//   |-- VP                                                        words 5-8
//   |   |-- (VBP like)
//   |   `-- VP                                                    words 6-8
//   |       |-- (VBG eating)
//   |       |-- NP: (NNS apples)
//   |       `-- ADVP: (RB quickly)
//   `-- (. .)                                                     word 9
inline constexpr std::string_view kCanonicalTree =
    "(S (NP (DT The) (JJ two) (JJ wayward) (NNS boys)) (VP (VBP like) (VP "
    "(VBG eating) (NP (NNS apples)) (ADVP (RB quickly)))) (. .))";

inline constexpr std::size_t kThe = 1, kBoys = 4, kLike = 5, kEating = 6,
                             kApples = 7, kQuickly = 8, kPeriod = 9;

inline std::string data_path(std::string_view name) {
  return std::string(SYNFEAT_TEST_DATA_DIR) + "/" + std::string(name);
}

inline std::string shipped_data_path(std::string_view name) {
  return std::string(SYNFEAT_SHIPPED_DATA_DIR) + "/" + std::string(name);
}

}  // namespace synfeat::testing

#endif  // SYNFEAT_TESTS_SUPPORT_FIXTURES_HPP_
