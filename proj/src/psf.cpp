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

#include "synfeat/psf.hpp"

#include <algorithm>
#include <string>

#include "synfeat/error.hpp"

namespace synfeat {

namespace {

const Node& spanning_node(const SyntaxTree& tree, std::size_t word,
                          NodeId phrase) {
  tree.word(word);  // range check
  const Node& node = tree.node(phrase);
  if (!node.span.contains(word)) {
    throw Error(ErrorCode::kInvalidArgument,
                "node '" + node.label + "' is not an ancestor of word " +
                    std::to_string(word));
  }
  return node;
}

Schema psf_schema(const PsfConfig& config, const LabelInventory& pos,
                  const LabelInventory& phrase) {
  const std::vector<std::string> pos_labels(pos.labels().begin(),
                                            pos.labels().end());
  const std::vector<std::string> phrase_labels(phrase.labels().begin(),
                                               phrase.labels().end());
  Schema schema;
  append_block(schema, "pos", pos.size(), pos_labels);
  for (std::size_t level = 1; level <= config.num_levels; ++level) {
    const std::string prefix = "level" + std::to_string(level) + ".";
    append_block(schema, prefix + "phrase", phrase.size(), phrase_labels);
    append_block(schema, prefix + "boundary", 1);
    append_block(schema, prefix + "position", 1);
  }
  return schema;
}

}  // namespace

void PsfConfig::validate() const {
  if (num_levels == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "phrase structure features need at least one level");
  }
}

std::vector<std::optional<NodeId>> select_layers(const SyntaxTree& tree,
                                                 std::size_t word,
                                                 const PsfConfig& config) {
  config.validate();
  std::vector<NodeId> chain = tree.phrase_ancestors(word);
  if (config.direction == LayerDirection::kBottomUp) {
    std::reverse(chain.begin(), chain.end());
  }
  std::vector<std::optional<NodeId>> layers(config.num_levels);
  const std::size_t present = std::min(config.num_levels, chain.size());
  std::copy_n(chain.begin(), present, layers.begin());
  return layers;
}

double relative_position(const SyntaxTree& tree, std::size_t word,
                         NodeId phrase) {
  const Span span = spanning_node(tree, word, phrase).span;
  return static_cast<double>(word - span.first + 1) /
         static_cast<double>(span.size());
}

double boundary_flag(const SyntaxTree& tree, std::size_t word, NodeId phrase) {
  return spanning_node(tree, word, phrase).span.first == word ? 1.0 : 0.0;
}

FeatureMatrix extract_psf(const SyntaxTree& tree, const PsfConfig& config,
                          const LabelInventory& pos_inventory,
                          const LabelInventory& phrase_inventory,
                          UnknownLabelPolicy policy) {
  config.validate();
  FeatureMatrix out(tree.num_words(),
                    psf_schema(config, pos_inventory, phrase_inventory));
  const std::size_t pos_width = pos_inventory.size();
  const std::size_t level_width = phrase_inventory.size() + 2;

  for (std::size_t w = 1; w <= tree.num_words(); ++w) {
    std::span<float> row = out.row(w - 1);
    one_hot_into(tree.pos(w), pos_inventory, policy, row.first(pos_width));

    const auto layers = select_layers(tree, w, config);
    for (std::size_t level = 0; level < layers.size(); ++level) {
      if (!layers[level]) continue;  // absent levels stay zero
      auto block = row.subspan(pos_width + level * level_width, level_width);
      one_hot_into(tree.node(*layers[level]).label, phrase_inventory, policy,
                   block.first(phrase_inventory.size()));
      block[phrase_inventory.size()] =
          static_cast<float>(boundary_flag(tree, w, *layers[level]));
      block[phrase_inventory.size() + 1] =
          static_cast<float>(relative_position(tree, w, *layers[level]));
    }
  }
  return out;
}

}  // namespace synfeat
