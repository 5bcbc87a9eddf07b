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

#ifndef SYNFEAT_TAGSET_HPP_
#define SYNFEAT_TAGSET_HPP_

#include <array>
#include <string_view>

// Built-in Penn Treebank label sets. The same lists ship as data files under
// data/ and are the default inventories when none is given.
namespace synfeat::tagset {

// 36 lexical PTB tags plus the three punctuation tags that survive into
// read-aloud text.
inline constexpr std::array<std::string_view, 39> kPosTags = {
    "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS",  "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS", "RP",   "SYM", "TO",  "UH",  "VB",  "VBD", "VBG", "VBN",
    "VBP", "VBZ", "WDT",  "WP",  "WP$", "WRB", ".",   ",",   ":",
};

// PTB clause and phrase labels, plus NML for nominal modifiers.
inline constexpr std::array<std::string_view, 27> kPhraseLabels = {
    "S",      "SBAR",   "SBARQ", "SINV",  "SQ",   "ADJP", "ADVP",
    "CONJP",  "FRAG",   "INTJ",  "LST",   "NAC",  "NP",   "NX",
    "PP",     "PRN",    "PRT",   "QP",    "RRC",  "UCP",  "VP",
    "WHADJP", "WHADVP", "WHNP",  "WHPP",  "X",    "NML",
};

// POS tags whose words are read as a pause rather than pronounced.
inline constexpr std::array<std::string_view, 9> kPunctuationTags = {
    ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "HYPH", "NFP",
};

// Wrapper labels emitted by parsers above the sentence node.
inline constexpr std::array<std::string_view, 2> kWrapperLabels = {"ROOT",
                                                                  "TOP"};

// Trace / empty-element tag.
inline constexpr std::string_view kTraceTag = "-NONE-";

}  // namespace synfeat::tagset

#endif  // SYNFEAT_TAGSET_HPP_
