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

#include "synfeat/wrf.hpp"

#include <string>
#include <vector>

namespace synfeat {

namespace {

// Walks up from the word's preterminal while the ancestor still has the
// word at the given edge of its span. Those ancestors form one unbroken
// chain, so the last one visited is the highest.
template <typename AtEdge>
std::optional<NodeId> highest_phrase_at_edge(const SyntaxTree& tree,
                                             std::size_t word, AtEdge at_edge) {
  std::optional<NodeId> highest;
  for (auto id = tree.preterminal(word).parent; id; id = tree.node(*id).parent) {
    const Node& node = tree.node(*id);
    if (!at_edge(node.span)) break;
    highest = node.id;
  }
  return highest;
}

std::string_view label_or_none(const SyntaxTree& tree,
                               std::optional<NodeId> id) {
  return id ? std::string_view(tree.node(*id).label) : kNoneLabel;
}

Schema wrf_schema(const LabelInventory& pos, const LabelInventory& phrase) {
  const std::vector<std::string> pos_labels(pos.labels().begin(),
                                            pos.labels().end());
  const std::vector<std::string> phrase_labels(phrase.labels().begin(),
                                               phrase.labels().end());
  Schema schema;
  append_block(schema, "pos", pos.size(), pos_labels);
  append_block(schema, "hbcw", phrase.size(), phrase_labels);
  append_block(schema, "hepw", phrase.size(), phrase_labels);
  append_block(schema, "lca", phrase.size(), phrase_labels);
  append_block(schema, "H_l", 1);
  append_block(schema, "D_cl", 1);
  append_block(schema, "D_pl", 1);
  append_block(schema, "D_cp", 1);
  return schema;
}

}  // namespace

std::optional<NodeId> hbcw(const SyntaxTree& tree, std::size_t word) {
  return highest_phrase_at_edge(
      tree, word, [word](const Span& s) { return s.first == word; });
}

std::optional<NodeId> hepw(const SyntaxTree& tree, std::size_t word) {
  tree.word(word);  // range check
  if (word == 1) return std::nullopt;
  const std::size_t preceding = word - 1;
  return highest_phrase_at_edge(
      tree, preceding, [preceding](const Span& s) { return s.last == preceding; });
}

std::optional<SyntacticDistances> heights_and_distances(const SyntaxTree& tree,
                                                        std::size_t word) {
  tree.word(word);
  if (word == 1) return std::nullopt;
  const std::size_t reference = tree.max_preterminal_depth();
  const Node& lca = tree.node(tree.lca(word - 1, word));
  const Node& current = tree.preterminal(word);
  const Node& preceding = tree.preterminal(word - 1);

  SyntacticDistances d;
  d.lca_height = reference - lca.depth;
  d.current_height = reference - current.depth;
  d.preceding_height = reference - preceding.depth;
  d.current_to_lca = d.lca_height - d.current_height;
  d.preceding_to_lca = d.lca_height - d.preceding_height;
  d.current_to_preceding = d.current_to_lca + d.preceding_to_lca;
  return d;
}

FeatureMatrix extract_wrf(const SyntaxTree& tree,
                          const LabelInventory& pos_inventory,
                          const LabelInventory& phrase_inventory,
                          UnknownLabelPolicy policy) {
  FeatureMatrix out(tree.num_words(), wrf_schema(pos_inventory, phrase_inventory));
  const std::size_t phrase_width = phrase_inventory.size();

  for (std::size_t w = 1; w <= tree.num_words(); ++w) {
    std::span<float> row = out.row(w - 1);
    std::size_t offset = 0;
    auto next = [&](std::size_t width) {
      auto block = row.subspan(offset, width);
      offset += width;
      return block;
    };

    one_hot_into(tree.pos(w), pos_inventory, policy, next(pos_inventory.size()));
    one_hot_into(label_or_none(tree, hbcw(tree, w)), phrase_inventory, policy,
                 next(phrase_width));
    one_hot_into(label_or_none(tree, hepw(tree, w)), phrase_inventory, policy,
                 next(phrase_width));

    auto lca_block = next(phrase_width);
    auto scalars = next(4);
    if (auto d = heights_and_distances(tree, w)) {
      one_hot_into(tree.node(tree.lca(w - 1, w)).label, phrase_inventory,
                   policy, lca_block);
      scalars[0] = static_cast<float>(d->lca_height);
      scalars[1] = static_cast<float>(d->current_to_lca);
      scalars[2] = static_cast<float>(d->preceding_to_lca);
      scalars[3] = static_cast<float>(d->current_to_preceding);
    }
  }
  return out;
}

}  // namespace synfeat
