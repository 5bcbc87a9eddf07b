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

#ifndef SYNFEAT_PSF_HPP_
#define SYNFEAT_PSF_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "synfeat/feature_matrix.hpp"
#include "synfeat/inventory.hpp"
#include "synfeat/treebank.hpp"

// Phrase structure features: a POS one-hot followed by one block per tree
// layer holding the phrase label one-hot, a phrase-initial flag, and the
// word's relative position inside that phrase.
namespace synfeat {

enum class LayerDirection {
  kTopDown,   // level 1 is the root
  kBottomUp,  // level 1 is the lowest phrase above the preterminal
};

struct PsfConfig {
  std::size_t num_levels = 10;
  LayerDirection direction = LayerDirection::kTopDown;

  // Throws Error(kInvalidArgument) when num_levels is zero.
  void validate() const;
};

// Width of a PSF row: |POS| + (|PHRASE| + 2) * levels.
constexpr std::size_t psf_width(std::size_t pos_labels,
                                std::size_t phrase_labels,
                                std::size_t levels) {
  return pos_labels + (phrase_labels + 2) * levels;
}

// Exactly config.num_levels entries; levels past the word's phrase chain
// are std::nullopt.
std::vector<std::optional<NodeId>> select_layers(const SyntaxTree& tree,
                                                 std::size_t word,
                                                 const PsfConfig& config);

// P/N where P is the 1-based position of `word` inside `phrase` and N the
// phrase's word count. Throws Error(kInvalidArgument) unless the phrase
// spans the word.
double relative_position(const SyntaxTree& tree, std::size_t word,
                         NodeId phrase);

// 1.0 when `word` is the first word of `phrase`, else 0.0. Same
// precondition as relative_position.
double boundary_flag(const SyntaxTree& tree, std::size_t word, NodeId phrase);

FeatureMatrix extract_psf(const SyntaxTree& tree, const PsfConfig& config,
                          const LabelInventory& pos_inventory,
                          const LabelInventory& phrase_inventory,
                          UnknownLabelPolicy policy = UnknownLabelPolicy::kError);

}  // namespace synfeat

#endif  // SYNFEAT_PSF_HPP_
