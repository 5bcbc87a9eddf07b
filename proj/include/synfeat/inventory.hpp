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

#ifndef SYNFEAT_INVENTORY_HPP_
#define SYNFEAT_INVENTORY_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synfeat/treebank.hpp"

namespace synfeat {

enum class LabelKind { kPos, kPhrase };

enum class UnknownLabelPolicy { kError, kZero };

// Junction sentinel: a word that begins (or follows the end of) no phrase.
// Always encoded as an all-zero block.
inline constexpr std::string_view kNoneLabel = "NONE";

// Ordered label vocabulary. Position in the list is the one-hot column.
class LabelInventory {
 public:
  // Throws Error(kLabel) on an empty list, duplicates, or the NONE sentinel.
  LabelInventory(LabelKind kind, std::vector<std::string> labels);

  LabelKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const LabelInventory& a, const LabelInventory& b) {
    return a.kind_ == b.kind_ && a.labels_ == b.labels_;
  }

 private:
  LabelKind kind_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The shipped 39-tag POS inventory or 27-label phrase inventory.
LabelInventory default_inventory(LabelKind kind);

// One label per line; blank lines and lines starting with '#' are skipped,
// except a line holding just "#", which is the PTB pound-sign tag.
LabelInventory parse_inventory(std::string_view text, LabelKind kind);
LabelInventory load_inventory(const std::filesystem::path& path,
                              LabelKind kind);
void save_inventory(const LabelInventory& inventory,
                    const std::filesystem::path& path);

// Labels in first-occurrence order over a preorder walk of each tree:
// preterminal labels for kPos, all other node labels for kPhrase.
LabelInventory build_inventory_from_corpus(std::span<const SyntaxTree> corpus,
                                           LabelKind kind);

// Writes the encoding of `label` into `out` (size must equal the inventory
// size). NONE and, under kZero, unknown labels leave `out` all zero.
void one_hot_into(std::string_view label, const LabelInventory& inventory,
                  UnknownLabelPolicy policy, std::span<float> out);

std::vector<float> one_hot(std::string_view label,
                           const LabelInventory& inventory,
                           UnknownLabelPolicy policy = UnknownLabelPolicy::kError);

}  // namespace synfeat

#endif  // SYNFEAT_INVENTORY_HPP_
