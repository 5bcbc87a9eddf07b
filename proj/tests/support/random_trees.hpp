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

#ifndef SYNFEAT_TESTS_SUPPORT_RANDOM_TREES_HPP_
#define SYNFEAT_TESTS_SUPPORT_RANDOM_TREES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "synfeat/tagset.hpp"

namespace synfeat::testing {

struct RandomTreeOptions {
  std::size_t max_words = 50;
  std::size_t max_depth = 15;  // deepest preterminal
  std::size_t max_children = 4;
};

// Generates bracketed trees whose labels all come from the default
// inventories, so every tree is extractable under the error policy.
class RandomTreeGenerator {
 public:
  explicit RandomTreeGenerator(std::uint64_t seed,
                               RandomTreeOptions options = {})
      : rng_(seed), options_(options) {}

  std::string next() {
    const std::size_t words = uniform(1, options_.max_words);
    std::string out;
    phrase(0, words, out);
    return out;
  }

  std::vector<std::string> corpus(std::size_t n) {
    std::vector<std::string> trees;
    trees.reserve(n);
    for (std::size_t i = 0; i < n; ++i) trees.push_back(next());
    return trees;
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  template <typename Array>
  std::string pick(const Array& labels) {
    return std::string(labels[uniform(0, labels.size() - 1)]);
  }

  void preterminal(std::string& out) {
    static const std::vector<std::string> kWords = {
        "the", "dog", "ran", "apples", "quickly", "Über", "café", "-LRB-",
        "-RRB-", "it's", "U.S.", "3.14", "naïve", "x"};
    out += "(" + pick(tagset::kPosTags) + " " + pick(kWords) + ")";
  }

  // Phrase at `depth` covering `words` words.
  void phrase(std::size_t depth, std::size_t words, std::string& out) {
    out += "(" + pick(tagset::kPhraseLabels);
    // A phrase child needs room for its own preterminal below it.
    const bool phrases_allowed = depth + 2 <= options_.max_depth;
    std::vector<std::size_t> parts;
    if (!phrases_allowed) {
      parts.assign(words, 1);
    } else {
      std::size_t k = uniform(1, std::min(words, options_.max_children));
      // Unary chains are legal but would hog the depth budget.
      if (k == 1 && words > 1 && uniform(0, 3) != 0) k = 2;
      std::size_t left = words;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t remaining_parts = k - i - 1;
        const std::size_t size =
            i + 1 == k ? left : uniform(1, left - remaining_parts);
        parts.push_back(size);
        left -= size;
      }
    }
    for (std::size_t size : parts) {
      out += ' ';
      if (size == 1 && (!phrases_allowed || uniform(0, 2) != 0)) {
        preterminal(out);
      } else {
        phrase(depth + 1, size, out);
      }
    }
    out += ")";
  }

  std::mt19937_64 rng_;
  RandomTreeOptions options_;
};

}  // namespace synfeat::testing

#endif  // SYNFEAT_TESTS_SUPPORT_RANDOM_TREES_HPP_
