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

#ifndef SYNFEAT_WRF_HPP_
#define SYNFEAT_WRF_HPP_

#include <cstddef>
#include <optional>

#include "synfeat/feature_matrix.hpp"
#include "synfeat/inventory.hpp"
#include "synfeat/treebank.hpp"

// Word relation features. Each row describes the junction between a word and
// the word before it: the phrases that meet there, their lowest common
// ancestor, and how far apart the two POS nodes sit in the tree.
namespace synfeat {

// Width of a WRF row: |POS| + 3 * |PHRASE| + 4.
constexpr std::size_t wrf_width(std::size_t pos_labels,
                                std::size_t phrase_labels) {
  return pos_labels + 3 * phrase_labels + 4;
}

// Highest phrase node whose first word is `word`; nullopt means NONE.
std::optional<NodeId> hbcw(const SyntaxTree& tree, std::size_t word);

// Highest phrase node whose last word is `word - 1`; nullopt means NONE,
// which is always the answer for the first word.
std::optional<NodeId> hepw(const SyntaxTree& tree, std::size_t word);

// Heights are measured up from the deepest preterminal in the tree:
// H(n) = max_preterminal_depth - depth(n). Distances are edge counts between
// POS nodes and the junction LCA; words themselves are never on the path.
struct SyntacticDistances {
  std::size_t lca_height = 0;        // H_l
  std::size_t current_height = 0;    // H_c
  std::size_t preceding_height = 0;  // H_p
  std::size_t current_to_lca = 0;    // D_cl = H_l - H_c
  std::size_t preceding_to_lca = 0;  // D_pl = H_l - H_p
  std::size_t current_to_preceding = 0;  // D_cp = D_cl + D_pl

  friend bool operator==(const SyntacticDistances&,
                         const SyntacticDistances&) = default;
};

// nullopt for the first word, which has no preceding word.
std::optional<SyntacticDistances> heights_and_distances(const SyntaxTree& tree,
                                                        std::size_t word);

FeatureMatrix extract_wrf(const SyntaxTree& tree,
                          const LabelInventory& pos_inventory,
                          const LabelInventory& phrase_inventory,
                          UnknownLabelPolicy policy = UnknownLabelPolicy::kError);

}  // namespace synfeat

#endif  // SYNFEAT_WRF_HPP_
