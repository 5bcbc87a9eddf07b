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

#include "synfeat/treebank.hpp"

#include <algorithm>
#include <utility>

#include "synfeat/error.hpp"
#include "synfeat/tagset.hpp"

namespace synfeat {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_printable_ascii(std::string_view label) {
  return std::all_of(label.begin(), label.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f;
  });
}

std::string unescape_word(std::string_view token) {
  if (token == "-LRB-") return "(";
  if (token == "-RRB-") return ")";
  return std::string(token);
}

std::string_view escape_word(std::string_view text) {
  if (text == "(") return "-LRB-";
  if (text == ")") return "-RRB-";
  return text;
}

// Node as read from the text, before ids, spans and depths are assigned.
struct RawNode {
  std::string label;
  std::size_t open_offset = 0;
  std::size_t label_offset = 0;
  std::vector<std::size_t> children;
  std::optional<std::string> word;
  std::size_t word_offset = 0;
};

struct RawTree {
  std::vector<RawNode> nodes;
  std::size_t root = 0;
};

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  RawTree read() {
    RawTree tree;
    std::vector<std::size_t> open;
    bool closed_root = false;

    skip_space();
    if (pos_ == text_.size()) fail("empty input");
    if (text_[pos_] != '(') fail("expected '(' at start of tree");

    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      if (closed_root) fail("unexpected content after the end of the tree");

      if (c == '(') {
        RawNode node;
        node.open_offset = pos_++;
        skip_space();
        node.label_offset = pos_;
        if (pos_ == text_.size() || text_[pos_] == '(' ||
            text_[pos_] == ')') {
          fail("empty label");
        }
        node.label = std::string(atom());
        const std::size_t id = tree.nodes.size();
        if (!open.empty()) {
          RawNode& parent = tree.nodes[open.back()];
          if (parent.word) {
            fail("word '" + *parent.word +
                     "' shares its node with a subtree; a word must be the "
                     "only child of a preterminal",
                 parent.word_offset);
          }
          parent.children.push_back(id);
        }
        tree.nodes.push_back(std::move(node));
        open.push_back(id);
      } else if (c == ')') {
        if (open.empty()) fail("unbalanced ')'");
        const RawNode& node = tree.nodes[open.back()];
        if (!node.word && node.children.empty()) {
          fail("phrase node '" + node.label + "' has no children",
               node.open_offset);
        }
        open.pop_back();
        ++pos_;
        if (open.empty()) closed_root = true;
      } else {
        const std::size_t offset = pos_;
        std::string_view token = atom();
        if (open.empty()) fail("word outside of any node", offset);
        RawNode& node = tree.nodes[open.back()];
        if (!node.children.empty() || node.word) {
          fail("word '" + std::string(token) +
                   "' is not the only child of a preterminal",
               offset);
        }
        node.word = unescape_word(token);
        node.word_offset = offset;
      }
    }
    if (!open.empty()) {
      fail("unbalanced '(': missing ')' for node '" +
               tree.nodes[open.back()].label + "'",
           text_.size());
    }
    return tree;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t offset) {
    throw Error(ErrorCode::kParse, message, offset);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_phrase_label(std::string_view label, const ParseOptions& options) {
  if (options.phrase_labels.empty()) {
    return std::find(tagset::kPhraseLabels.begin(), tagset::kPhraseLabels.end(),
                     label) != tagset::kPhraseLabels.end();
  }
  return std::find(options.phrase_labels.begin(), options.phrase_labels.end(),
                   label) != options.phrase_labels.end();
}

bool is_wrapper_label(std::string_view label) {
  return std::find(tagset::kWrapperLabels.begin(), tagset::kWrapperLabels.end(),
                   label) != tagset::kWrapperLabels.end();
}

void validate(const RawTree& raw, const ParseOptions& options) {
  for (const RawNode& node : raw.nodes) {
    if (!is_printable_ascii(node.label)) {
      throw Error(ErrorCode::kParse,
                  "label contains characters outside printable ASCII",
                  node.label_offset);
    }
    if (node.label == tagset::kTraceTag) {
      throw Error(ErrorCode::kParse, "trace nodes (-NONE-) are not supported",
                  node.label_offset);
    }
    if (node.word && is_phrase_label(node.label, options)) {
      throw Error(ErrorCode::kParse,
                  "word '" + *node.word + "' sits directly under phrase node '" +
                      node.label + "' without a preterminal",
                  node.word_offset);
    }
  }
}

}  // namespace

class TreeAssembler {
 public:
  static SyntaxTree assemble(RawTree& raw) {
    SyntaxTree tree;
    tree.nodes_.reserve(raw.nodes.size());

    struct Pending {
      std::size_t raw;
      std::optional<NodeId> parent;
      std::size_t depth;
    };
    std::vector<Pending> stack{{raw.root, std::nullopt, 0}};
    while (!stack.empty()) {
      Pending item = stack.back();
      stack.pop_back();
      RawNode& source = raw.nodes[item.raw];

      Node node;
      node.id = NodeId{static_cast<std::uint32_t>(tree.nodes_.size())};
      node.label = std::move(source.label);
      node.parent = item.parent;
      node.depth = item.depth;
      if (source.word) {
        const std::size_t index = tree.words_.size() + 1;
        node.word = index;
        node.span = {index, index};
        tree.words_.push_back({index, std::move(*source.word), node.id});
        tree.max_preterminal_depth_ =
            std::max(tree.max_preterminal_depth_, node.depth);
      }
      if (item.parent) {
        tree.nodes_[index_of(*item.parent)].children.push_back(node.id);
      }
      for (auto it = source.children.rbegin(); it != source.children.rend();
           ++it) {
        stack.push_back({*it, node.id, item.depth + 1});
      }
      tree.nodes_.push_back(std::move(node));
    }

    // Children always have larger ids than their parent.
    for (auto it = tree.nodes_.rbegin(); it != tree.nodes_.rend(); ++it) {
      if (it->is_phrase()) {
        it->span = {tree.nodes_[index_of(it->children.front())].span.first,
                    tree.nodes_[index_of(it->children.back())].span.last};
      }
    }
    return tree;
  }
};

const Node& SyntaxTree::node(NodeId id) const {
  if (index_of(id) >= nodes_.size()) {
    throw Error(ErrorCode::kRange,
                "node id " + std::to_string(index_of(id)) + " out of range");
  }
  return nodes_[index_of(id)];
}

const Word& SyntaxTree::word(std::size_t index) const {
  if (index == 0 || index > words_.size()) {
    throw Error(ErrorCode::kRange, "word index " + std::to_string(index) +
                                       " out of range [1, " +
                                       std::to_string(words_.size()) + "]");
  }
  return words_[index - 1];
}

const Node& SyntaxTree::preterminal(std::size_t word_index) const {
  return nodes_[index_of(word(word_index).preterminal)];
}

const std::string& SyntaxTree::pos(std::size_t word_index) const {
  return preterminal(word_index).label;
}

std::vector<NodeId> SyntaxTree::phrase_ancestors(std::size_t word_index) const {
  std::vector<NodeId> chain;
  for (auto id = preterminal(word_index).parent; id;
       id = nodes_[index_of(*id)].parent) {
    chain.push_back(*id);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

NodeId SyntaxTree::lca(std::size_t word_a, std::size_t word_b) const {
  const Node* a = &preterminal(word_a);
  const Node* b = &preterminal(word_b);
  while (a->depth > b->depth) a = &nodes_[index_of(*a->parent)];
  while (b->depth > a->depth) b = &nodes_[index_of(*b->parent)];
  while (a != b) {
    a = &nodes_[index_of(*a->parent)];
    b = &nodes_[index_of(*b->parent)];
  }
  return a->id;
}

SyntaxTree parse_bracketed(std::string_view text, const ParseOptions& options) {
  RawTree raw = BracketReader(text).read();
  validate(raw, options);

  const RawNode& top = raw.nodes[raw.root];
  if (is_wrapper_label(top.label) && !top.word && top.children.size() == 1) {
    raw.root = top.children.front();
  }
  return TreeAssembler::assemble(raw);
}

namespace {

void write_node(const SyntaxTree& tree, const Node& node, std::string& out) {
  out += '(';
  out += node.label;
  if (node.word) {
    out += ' ';
    out += escape_word(tree.word(*node.word).text);
  } else {
    for (NodeId child : node.children) {
      out += ' ';
      write_node(tree, tree.node(child), out);
    }
  }
  out += ')';
}

}  // namespace

std::string serialize(const SyntaxTree& tree) {
  std::string out;
  write_node(tree, tree.node(tree.root()), out);
  return out;
}

std::vector<TreeText> split_treebank(std::string_view stream) {
  std::vector<TreeText> trees;
  std::size_t depth = 0;
  std::size_t line = 1;
  std::size_t start = 0;
  std::size_t start_line = 1;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const char c = stream[i];
    if (c == '\n') {
      ++line;
    } else if (c == '(') {
      if (depth == 0) {
        start = i;
        start_line = line;
      }
      ++depth;
    } else if (c == ')') {
      if (depth == 0) {
        throw Error(ErrorCode::kParse,
                    "unbalanced ')' on line " + std::to_string(line), i);
      }
      if (--depth == 0) {
        trees.push_back(
            {std::string(stream.substr(start, i + 1 - start)), start_line});
      }
    } else if (depth == 0 && !is_space(c)) {
      throw Error(ErrorCode::kParse,
                  "text outside of a tree on line " + std::to_string(line), i);
    }
  }
  if (depth != 0) {
    throw Error(ErrorCode::kParse,
                "unterminated tree starting on line " +
                    std::to_string(start_line),
                stream.size());
  }
  return trees;
}

}  // namespace synfeat
