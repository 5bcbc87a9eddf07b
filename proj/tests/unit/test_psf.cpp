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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_trees.hpp"
#include "synfeat/error.hpp"
#include "synfeat/inventory.hpp"
#include "synfeat/psf.hpp"

namespace {

using namespace synfeat;
using namespace synfeat::testing;

const LabelInventory& pos_inv() {
  static const LabelInventory inv = default_inventory(LabelKind::kPos);
  return inv;
}

const LabelInventory& phrase_inv() {
  static const LabelInventory inv = default_inventory(LabelKind::kPhrase);
  return inv;
}

// Expected PSF row built from ancestor paths and leaf-order spans.
std::vector<float> oracle_row(const SyntaxTree& t, std::size_t word,
                              const PsfConfig& config) {
  const auto pts = preterminals_in_order(t);
  const auto spans = leaf_order_spans(t);
  auto path = ancestor_path(t, pts[word - 1]);
  path.pop_back();  // the preterminal itself
  if (config.direction == LayerDirection::kBottomUp) {
    std::reverse(path.begin(), path.end());
  }

  std::vector<float> row;
  const std::string& pos = t.nodes()[index_of(pts[word - 1])].label;
  for (const auto& l : pos_inv().labels()) row.push_back(l == pos ? 1.0f : 0.0f);
  for (std::size_t level = 0; level < config.num_levels; ++level) {
    if (level >= path.size()) {
      row.insert(row.end(), phrase_inv().size() + 2, 0.0f);
      continue;
    }
    const Node& n = t.nodes()[index_of(path[level])];
    for (const auto& l : phrase_inv().labels()) {
      row.push_back(l == n.label ? 1.0f : 0.0f);
    }
    const OracleSpan s = spans[index_of(n.id)];
    row.push_back(s.first == word ? 1.0f : 0.0f);
    row.push_back(static_cast<float>(static_cast<double>(word - s.first + 1) /
                                     static_cast<double>(s.last - s.first + 1)));
  }
  return row;
}

std::vector<float> row_of(const FeatureMatrix& m, std::size_t r) {
  const auto row = m.row(r);
  return {row.begin(), row.end()};
}

}  // namespace

TEST_CASE("psf width") {
  for (std::size_t n : {3, 5, 10, 15}) {
    CHECK(psf_width(39, 27, n) == 39 + 29 * n);
    const SyntaxTree t = parse_bracketed(kCanonicalTree);
    const auto m = extract_psf(t, {n, LayerDirection::kTopDown}, pos_inv(), phrase_inv());
    CHECK(m.cols() == 39 + 29 * n);
    CHECK(m.rows() == 9);
    CHECK(schema_width(m.schema()) == m.cols());
  }
  CHECK(psf_width(39, 27, 10) == 329);
}

TEST_CASE("relative position and boundary on the canonical tree") {
  const SyntaxTree t = parse_bracketed(kCanonicalTree);
  const auto chain = t.phrase_ancestors(kLike);
  REQUIRE(chain.size() == 2);
  CHECK(relative_position(t, kLike, t.root()) == doctest::Approx(5.0 / 9.0));
  CHECK(boundary_flag(t, kLike, t.root()) == 0.0);
  CHECK(t.node(chain[1]).label == "VP");
  CHECK(relative_position(t, kLike, chain[1]) == 0.25);
  CHECK(boundary_flag(t, kLike, chain[1]) == 1.0);
  CHECK(relative_position(t, kPeriod, t.root()) == 1.0);
  CHECK_THROWS_AS(relative_position(t, kBoys, chain[1]), Error);
  CHECK_THROWS_AS(boundary_flag(t, kBoys, chain[1]), Error);
}

TEST_CASE("select_layers") {
  const SyntaxTree t = parse_bracketed(kCanonicalTree);
  auto labels = [&](const std::vector<std::optional<NodeId>>& layers) {
    std::vector<std::string> out;
    for (const auto& l : layers) out.push_back(l ? t.node(*l).label : "-");
    return out;
  };
  const auto td = select_layers(t, kApples, {3, LayerDirection::kTopDown});
  CHECK(labels(td) == std::vector<std::string>{"S", "VP", "VP"});
  const auto bu = select_layers(t, kApples, {3, LayerDirection::kBottomUp});
  CHECK(labels(bu) == std::vector<std::string>{"NP", "VP", "VP"});
  CHECK(t.node(*bu[1]).depth == 2);
  CHECK(t.node(*bu[2]).depth == 1);
  const auto padded = select_layers(t, kApples, {6, LayerDirection::kBottomUp});
  CHECK(labels(padded) ==
        std::vector<std::string>{"NP", "VP", "VP", "S", "-", "-"});
}

TEST_CASE("canonical psf row for like") {
  const SyntaxTree t = parse_bracketed(kCanonicalTree);
  const auto m = extract_psf(t, {}, pos_inv(), phrase_inv());
  REQUIRE(m.cols() == 329);
  const std::size_t r = kLike - 1;
  CHECK(m.at(r, *pos_inv().index_of("VBP")) == 1.0f);

  const ColumnBlock& p1 = m.block("level1.phrase");
  CHECK(m.at(r, p1.offset + *phrase_inv().index_of("S")) == 1.0f);
  CHECK(m.at(r, m.block("level1.boundary").offset) == 0.0f);
  CHECK(m.at(r, m.block("level1.position").offset) == static_cast<float>(5.0 / 9.0));

  const ColumnBlock& p2 = m.block("level2.phrase");
  CHECK(m.at(r, p2.offset + *phrase_inv().index_of("VP")) == 1.0f);
  CHECK(m.at(r, m.block("level2.boundary").offset) == 1.0f);
  CHECK(m.at(r, m.block("level2.position").offset) == 0.25f);

  const std::size_t tail = m.block("level3.phrase").offset;
  for (std::size_t c = tail; c < m.cols(); ++c) CHECK(m.at(r, c) == 0.0f);
  CHECK(row_of(m, r) == oracle_row(t, kLike, {}));
}

TEST_CASE("psf schema") {
  const SyntaxTree t = parse_bracketed(kCanonicalTree);
  const auto m = extract_psf(t, {2, LayerDirection::kTopDown}, pos_inv(), phrase_inv());
  std::vector<std::string> names;
  for (const auto& b : m.schema()) names.push_back(b.name);
  CHECK(names == std::vector<std::string>{"pos", "level1.phrase", "level1.boundary",
                                          "level1.position", "level2.phrase",
                                          "level2.boundary", "level2.position"});
  CHECK(m.block("pos").column_labels.size() == 39);
  CHECK(m.block("level2.phrase").column_labels.size() == 27);
}

TEST_CASE("psf matches oracle on random trees") {
  RandomTreeGenerator gen(23);
  for (int i = 0; i < 150; ++i) {
    const SyntaxTree t = parse_bracketed(gen.next());
    for (std::size_t n : {1, 3, 10, 15}) {
      for (auto dir : {LayerDirection::kTopDown, LayerDirection::kBottomUp}) {
        const PsfConfig config{n, dir};
        const auto m = extract_psf(t, config, pos_inv(), phrase_inv());
        REQUIRE(m.rows() == t.num_words());
        REQUIRE(m.cols() == 39 + 29 * n);
        for (std::size_t w = 1; w <= t.num_words(); ++w) {
          CHECK(row_of(m, w - 1) == oracle_row(t, w, config));
        }
      }
    }
  }
}

TEST_CASE("psf row properties") {
  RandomTreeGenerator gen(5);
  for (int i = 0; i < 100; ++i) {
    const SyntaxTree t = parse_bracketed(gen.next());
    const auto td = extract_psf(t, {15, LayerDirection::kTopDown}, pos_inv(), phrase_inv());
    const auto bu = extract_psf(t, {15, LayerDirection::kBottomUp}, pos_inv(), phrase_inv());
    for (std::size_t r = 0; r < t.num_words(); ++r) {
      std::multiset<std::vector<float>> td_blocks, bu_blocks;
      for (std::size_t level = 1; level <= 15; ++level) {
        const std::size_t off = td.block("level" + std::to_string(level) + ".phrase").offset;
        const auto a = td.row(r).subspan(off, 29);
        const auto b = bu.row(r).subspan(off, 29);
        td_blocks.emplace(a.begin(), a.end());
        bu_blocks.emplace(b.begin(), b.end());
        const float position = a[28];
        CHECK(position >= 0.0f);
        CHECK(position <= 1.0f);
        float hot = 0.0f;
        for (std::size_t c = 0; c < 27; ++c) hot += a[c];
        CHECK((hot == 1.0f) == (position > 0.0f));
      }
      // Both directions describe the same set of phrases when N covers the chain.
      CHECK(td_blocks == bu_blocks);
      float pos_hot = 0.0f;
      for (std::size_t c = 0; c < 39; ++c) pos_hot += td.at(r, c);
      CHECK(pos_hot == 1.0f);
    }
  }
}

TEST_CASE("psf configuration and label errors") {
  const SyntaxTree t = parse_bracketed(kCanonicalTree);
  CHECK_THROWS_AS(extract_psf(t, {0, LayerDirection::kTopDown}, pos_inv(), phrase_inv()),
                  Error);
  const LabelInventory small(LabelKind::kPhrase, {"NP", "VP"});
  CHECK_THROWS_AS(extract_psf(t, {}, pos_inv(), small), Error);
  const auto zeroed = extract_psf(t, {}, pos_inv(), small, UnknownLabelPolicy::kZero);
  CHECK(zeroed.cols() == 39 + 4 * 10);
  CHECK(zeroed.at(kLike - 1, zeroed.block("level1.phrase").offset) == 0.0f);
  CHECK(zeroed.at(kLike - 1, zeroed.block("level1.position").offset) ==
        static_cast<float>(5.0 / 9.0));
}
