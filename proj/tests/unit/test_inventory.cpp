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
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/random_trees.hpp"
#include "synfeat/error.hpp"
#include "synfeat/inventory.hpp"
#include "synfeat/tagset.hpp"

namespace {

using namespace synfeat;
using namespace synfeat::testing;

std::vector<std::string> to_vector(std::span<const std::string> labels) {
  return {labels.begin(), labels.end()};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("default inventory sizes") {
  CHECK(default_inventory(LabelKind::kPos).size() == 39);
  CHECK(default_inventory(LabelKind::kPhrase).size() == 27);
  CHECK(default_inventory(LabelKind::kPos).kind() == LabelKind::kPos);
}

TEST_CASE("shipped inventory files match the defaults") {
  const auto pos = load_inventory(shipped_data_path("pos_labels.txt"), LabelKind::kPos);
  const auto phrase =
      load_inventory(shipped_data_path("phrase_labels.txt"), LabelKind::kPhrase);
  CHECK(pos == default_inventory(LabelKind::kPos));
  CHECK(phrase == default_inventory(LabelKind::kPhrase));
}

TEST_CASE("parse_inventory") {
  const auto inv = parse_inventory("# header\n\nNP\n  VP  \n#\nS\n", LabelKind::kPhrase);
  CHECK(to_vector(inv.labels()) == std::vector<std::string>{"NP", "VP", "#", "S"});
  CHECK(inv.index_of("VP") == 1);
  CHECK(inv.index_of("#") == 2);
  CHECK(!inv.index_of("ADJP").has_value());
}

TEST_CASE("invalid inventories") {
  CHECK(code_of([] { parse_inventory("", LabelKind::kPos); }) == ErrorCode::kLabel);
  CHECK(code_of([] { parse_inventory("NN\nNN\n", LabelKind::kPos); }) ==
        ErrorCode::kLabel);
  CHECK(code_of([] { parse_inventory("NN\nNONE\n", LabelKind::kPos); }) ==
        ErrorCode::kLabel);
  CHECK(code_of([] { load_inventory("/nonexistent/labels.txt", LabelKind::kPos); }) ==
        ErrorCode::kIo);
}

TEST_CASE("save and load round trip") {
  const auto path = std::filesystem::temp_directory_path() / "synfeat_inventory_test.txt";
  const LabelInventory inv(LabelKind::kPhrase, {"NP", "#", "VP"});
  save_inventory(inv, path);
  CHECK(load_inventory(path, LabelKind::kPhrase) == inv);
  std::filesystem::remove(path);
}

TEST_CASE("build from canonical corpus") {
  const std::vector<SyntaxTree> corpus{parse_bracketed(kCanonicalTree)};
  CHECK(to_vector(build_inventory_from_corpus(corpus, LabelKind::kPhrase).labels()) ==
        std::vector<std::string>{"S", "NP", "VP", "ADVP"});
  CHECK(to_vector(build_inventory_from_corpus(corpus, LabelKind::kPos).labels()) ==
        std::vector<std::string>{"DT", "JJ", "NNS", "VBP", "VBG", "RB", "."});
  CHECK(code_of([] { build_inventory_from_corpus({}, LabelKind::kPos); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("built inventories cover the corpus") {
  RandomTreeGenerator gen(11);
  std::vector<SyntaxTree> corpus;
  for (const auto& text : gen.corpus(50)) corpus.push_back(parse_bracketed(text));
  const auto pos = build_inventory_from_corpus(corpus, LabelKind::kPos);
  const auto phrase = build_inventory_from_corpus(corpus, LabelKind::kPhrase);
  for (const SyntaxTree& t : corpus) {
    for (const Node& n : t.nodes()) {
      CHECK((n.is_preterminal() ? pos : phrase).index_of(n.label).has_value());
    }
  }
}

TEST_CASE("one_hot") {
  const auto inv = default_inventory(LabelKind::kPhrase);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto v = one_hot(inv.labels()[i], inv);
    REQUIRE(v.size() == inv.size());
    for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] == (i == j ? 1.0f : 0.0f));
  }
  const auto none = one_hot(kNoneLabel, inv);
  CHECK(std::all_of(none.begin(), none.end(), [](float x) { return x == 0.0f; }));
  CHECK(code_of([&] { one_hot("BOGUS", inv); }) == ErrorCode::kLabel);
  const auto zero = one_hot("BOGUS", inv, UnknownLabelPolicy::kZero);
  CHECK(std::all_of(zero.begin(), zero.end(), [](float x) { return x == 0.0f; }));

  std::vector<float> wrong(3);
  CHECK(code_of([&] {
          one_hot_into("NP", inv, UnknownLabelPolicy::kError, wrong);
        }) == ErrorCode::kDimension);
}
