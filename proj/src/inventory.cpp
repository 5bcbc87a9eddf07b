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

#include "synfeat/inventory.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "synfeat/error.hpp"
#include "synfeat/tagset.hpp"

namespace synfeat {

namespace {

const char* kind_name(LabelKind kind) {
  return kind == LabelKind::kPos ? "POS" : "phrase";
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

}  // namespace

LabelInventory::LabelInventory(LabelKind kind, std::vector<std::string> labels)
    : kind_(kind), labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::kLabel,
                std::string("empty ") + kind_name(kind_) + " inventory");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorCode::kLabel, "empty label in inventory");
    }
    if (labels_[i] == kNoneLabel) {
      throw Error(ErrorCode::kLabel,
                  "NONE is reserved and cannot be an inventory label");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::kLabel,
                  "duplicate label '" + labels_[i] + "' in inventory");
    }
  }
}

std::optional<std::size_t> LabelInventory::index_of(
    std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelInventory default_inventory(LabelKind kind) {
  std::vector<std::string> labels;
  if (kind == LabelKind::kPos) {
    labels.assign(tagset::kPosTags.begin(), tagset::kPosTags.end());
  } else {
    labels.assign(tagset::kPhraseLabels.begin(), tagset::kPhraseLabels.end());
  }
  return LabelInventory(kind, std::move(labels));
}

LabelInventory parse_inventory(std::string_view text, LabelKind kind) {
  std::vector<std::string> labels;
  std::size_t line_number = 0;
  std::unordered_set<std::string> seen;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = trim(text.substr(0, newline));
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    if (line.empty()) continue;
    if (line.front() == '#' && line != "#") continue;
    if (!seen.emplace(line).second) {
      throw Error(ErrorCode::kLabel, "duplicate label '" + std::string(line) +
                                         "' on line " +
                                         std::to_string(line_number));
    }
    labels.emplace_back(line);
  }
  return LabelInventory(kind, std::move(labels));
}

LabelInventory load_inventory(const std::filesystem::path& path,
                              LabelKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open inventory file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_inventory(buffer.str(), kind);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_inventory(const LabelInventory& inventory,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write inventory file " + path.string());
  }
  for (const auto& label : inventory.labels()) out << label << '\n';
  if (!out.flush()) {
    throw Error(ErrorCode::kIo, "failed writing " + path.string());
  }
}

LabelInventory build_inventory_from_corpus(std::span<const SyntaxTree> corpus,
                                           LabelKind kind) {
  if (corpus.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot build an inventory from an empty corpus");
  }
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (const SyntaxTree& tree : corpus) {
    // Node ids are preorder, so a linear scan is a preorder walk.
    for (const Node& node : tree.nodes()) {
      if (node.is_preterminal() != (kind == LabelKind::kPos)) continue;
      if (seen.insert(node.label).second) labels.push_back(node.label);
    }
  }
  return LabelInventory(kind, std::move(labels));
}

void one_hot_into(std::string_view label, const LabelInventory& inventory,
                  UnknownLabelPolicy policy, std::span<float> out) {
  if (out.size() != inventory.size()) {
    throw Error(ErrorCode::kDimension,
                "one-hot buffer has " + std::to_string(out.size()) +
                    " slots, inventory has " +
                    std::to_string(inventory.size()));
  }
  std::fill(out.begin(), out.end(), 0.0f);
  if (label == kNoneLabel) return;
  if (auto index = inventory.index_of(label)) {
    out[*index] = 1.0f;
    return;
  }
  if (policy == UnknownLabelPolicy::kError) {
    throw Error(ErrorCode::kLabel, "unknown " +
                                       std::string(kind_name(inventory.kind())) +
                                       " label '" + std::string(label) + "'");
  }
}

std::vector<float> one_hot(std::string_view label,
                           const LabelInventory& inventory,
                           UnknownLabelPolicy policy) {
  std::vector<float> out(inventory.size());
  one_hot_into(label, inventory, policy, out);
  return out;
}

}  // namespace synfeat
