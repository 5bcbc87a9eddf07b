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

#ifndef SYNFEAT_TREEBANK_HPP_
#define SYNFEAT_TREEBANK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synfeat {

// Index into SyntaxTree::nodes(). Node ids follow preorder; the root is 0.
enum class NodeId : std::uint32_t {};

constexpr std::size_t index_of(NodeId id) {
  return static_cast<std::size_t>(id);
}

// Inclusive range of 1-based word indices covered by a node.
struct Span {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t word) const {
    return first <= word && word <= last;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Node {
  NodeId id{};
  std::string label;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;  // empty for preterminals
  Span span;
  std::size_t depth = 0;  // edges from the root
  std::optional<std::size_t> word;  // set on preterminals only

  bool is_preterminal() const { return word.has_value(); }
  bool is_phrase() const { return !word.has_value(); }
  friend bool operator==(const Node&, const Node&) = default;
};

struct Word {
  std::size_t index = 0;  // 1-based
  std::string text;       // unescaped: -LRB- becomes "("
  NodeId preterminal{};
  friend bool operator==(const Word&, const Word&) = default;
};

// Immutable constituency tree. Phrase nodes have one or more node children;
// preterminals (POS nodes) have exactly one word. All queries are const and
// safe to call concurrently.
class SyntaxTree {
 public:
  NodeId root() const { return NodeId{0}; }
  const Node& node(NodeId id) const;
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Word> words() const { return words_; }
  std::size_t num_words() const { return words_.size(); }

  // Throws Error(kRange) unless 1 <= index <= num_words().
  const Word& word(std::size_t index) const;
  const Node& preterminal(std::size_t word_index) const;
  const std::string& pos(std::size_t word_index) const;

  // Phrase nodes above the word's preterminal, root first.
  std::vector<NodeId> phrase_ancestors(std::size_t word_index) const;

  // Deepest node whose span holds both words. lca(k, k) is k's preterminal.
  NodeId lca(std::size_t word_a, std::size_t word_b) const;

  std::size_t first_word_of(NodeId id) const { return node(id).span.first; }
  std::size_t last_word_of(NodeId id) const { return node(id).span.last; }

  // Largest preterminal depth; the reference level for tree heights.
  std::size_t max_preterminal_depth() const { return max_preterminal_depth_; }

  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;

 private:
  friend class TreeAssembler;

  std::vector<Node> nodes_;
  std::vector<Word> words_;
  std::size_t max_preterminal_depth_ = 0;
};

struct ParseOptions {
  // Labels that may never sit directly above a word. Empty selects the
  // built-in PTB phrase labels.
  std::span<const std::string> phrase_labels;
};

// Parses one Penn Treebank s-expression such as "(S (NN dog))". A single
// ROOT or TOP wrapper is removed. Throws Error(kParse) with the character
// offset of the problem.
SyntaxTree parse_bracketed(std::string_view text,
                           const ParseOptions& options = {});

// Canonical single-line form; words are re-escaped (-LRB-, -RRB-).
std::string serialize(const SyntaxTree& tree);

struct TreeText {
  std::string text;
  std::size_t line = 1;  // line on which the tree starts
};

// Splits a treebank into s-expressions by bracket balance. Works for one
// tree per line as well as trees spread over several lines.
std::vector<TreeText> split_treebank(std::string_view stream);

}  // namespace synfeat

#endif  // SYNFEAT_TREEBANK_HPP_
