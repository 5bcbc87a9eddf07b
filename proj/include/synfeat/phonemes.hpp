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

#ifndef SYNFEAT_PHONEMES_HPP_
#define SYNFEAT_PHONEMES_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synfeat/feature_matrix.hpp"
#include "synfeat/treebank.hpp"

namespace synfeat {

enum class OovPolicy {
  kError,    // abort on the first unknown word
  kLetters,  // one pseudo-phoneme per character
  kSkip,     // no phonemes; the word is dropped from phoneme-level output
};

struct LexiconOptions {
  std::string silence_symbol = "sil";
  OovPolicy oov_policy = OovPolicy::kError;
  // Words tagged with one of these are read as a single silence phoneme.
  // Empty selects the PTB punctuation tags.
  std::vector<std::string> punctuation_tags;
};

// Case-insensitive word -> phoneme sequence table.
class Lexicon {
 public:
  explicit Lexicon(LexiconOptions options = {});

  // Keeps the first pronunciation of a word; returns false for duplicates.
  // Throws Error(kLexicon) when `phonemes` is empty.
  bool add(std::string_view word, std::vector<std::string> phonemes);

  // nullptr when the word is unknown.
  const std::vector<std::string>* lookup(std::string_view word) const;

  bool is_punctuation(std::string_view pos) const;
  std::size_t size() const { return entries_.size(); }
  const LexiconOptions& options() const { return options_; }

 private:
  LexiconOptions options_;
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// CMUdict-style text: "WORD PH1 PH2 ...", ";;;" comment lines, and
// alternate pronunciations marked "WORD(2)" (the first one wins).
Lexicon parse_lexicon(std::istream& in, LexiconOptions options = {});
Lexicon load_lexicon(const std::filesystem::path& path,
                     LexiconOptions options = {});

struct WordPhonemes {
  std::size_t word_index = 0;  // 1-based index in the tree
  std::vector<std::string> phonemes;

  std::size_t count() const { return phonemes.size(); }
  friend bool operator==(const WordPhonemes&, const WordPhonemes&) = default;
};

// Phonemes of every word that was not skipped, in sentence order.
struct PhonemeAlignment {
  std::size_t num_words = 0;  // words in the source tree, skipped included
  std::vector<WordPhonemes> words;

  std::size_t total_phonemes() const;
  friend bool operator==(const PhonemeAlignment&,
                         const PhonemeAlignment&) = default;
};

// `sentence_index` only labels error messages.
PhonemeAlignment phonemize(const SyntaxTree& tree, const Lexicon& lexicon,
                           std::size_t sentence_index = 0);

// Repeats each word row once per phoneme. `word_features` may have one row
// per tree word or one row per aligned (non-skipped) word.
FeatureMatrix upsample(const FeatureMatrix& word_features,
                       const PhonemeAlignment& alignment);

}  // namespace synfeat

#endif  // SYNFEAT_PHONEMES_HPP_
