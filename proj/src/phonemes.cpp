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

#include "synfeat/phonemes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "synfeat/error.hpp"
#include "synfeat/tagset.hpp"

namespace synfeat {

namespace {

std::string fold_case(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// "READ(2)" -> "READ"
std::string_view strip_variant_marker(std::string_view word) {
  if (word.size() < 3 || word.back() != ')') return word;
  const auto open = word.rfind('(');
  if (open == std::string_view::npos || open == 0) return word;
  const auto digits = word.substr(open + 1, word.size() - open - 2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return word;
  }
  return word.substr(0, open);
}

// Splits on UTF-8 code point boundaries.
std::vector<std::string> letters_of(std::string_view word) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t len = 1;
    const auto lead = static_cast<unsigned char>(word[i]);
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    len = std::min(len, word.size() - i);
    out.push_back(fold_case(word.substr(i, len)));
    i += len;
  }
  return out;
}

}  // namespace

Lexicon::Lexicon(LexiconOptions options) : options_(std::move(options)) {
  if (options_.punctuation_tags.empty()) {
    options_.punctuation_tags.assign(tagset::kPunctuationTags.begin(),
                                     tagset::kPunctuationTags.end());
  }
  if (options_.silence_symbol.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "silence symbol must not be empty");
  }
}

bool Lexicon::add(std::string_view word, std::vector<std::string> phonemes) {
  if (phonemes.empty()) {
    throw Error(ErrorCode::kLexicon,
                "lexicon entry '" + std::string(word) + "' has no phonemes");
  }
  return entries_.try_emplace(fold_case(word), std::move(phonemes)).second;
}

const std::vector<std::string>* Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(fold_case(word));
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::is_punctuation(std::string_view pos) const {
  return std::find(options_.punctuation_tags.begin(),
                   options_.punctuation_tags.end(),
                   pos) != options_.punctuation_tags.end();
}

Lexicon parse_lexicon(std::istream& in, LexiconOptions options) {
  Lexicon lexicon(std::move(options));
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.rfind(";;;", 0) == 0) continue;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    std::vector<std::string> phonemes;
    for (std::string ph; fields >> ph;) phonemes.push_back(std::move(ph));
    if (phonemes.empty()) {
      throw Error(ErrorCode::kLexicon, "line " + std::to_string(line_number) +
                                           ": no phonemes for '" + word + "'");
    }
    lexicon.add(strip_variant_marker(word), std::move(phonemes));
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path,
                     LexiconOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open lexicon " + path.string());
  }
  try {
    return parse_lexicon(in, std::move(options));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kLexicon) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::size_t PhonemeAlignment::total_phonemes() const {
  std::size_t total = 0;
  for (const auto& w : words) total += w.count();
  return total;
}

PhonemeAlignment phonemize(const SyntaxTree& tree, const Lexicon& lexicon,
                           std::size_t sentence_index) {
  PhonemeAlignment alignment;
  alignment.num_words = tree.num_words();
  for (const Word& word : tree.words()) {
    if (lexicon.is_punctuation(tree.pos(word.index))) {
      alignment.words.push_back(
          {word.index, {lexicon.options().silence_symbol}});
      continue;
    }
    if (const auto* phonemes = lexicon.lookup(word.text)) {
      alignment.words.push_back({word.index, *phonemes});
      continue;
    }
    switch (lexicon.options().oov_policy) {
      case OovPolicy::kError:
        throw Error(ErrorCode::kLexicon,
                    "out-of-vocabulary word '" + word.text + "' (word " +
                        std::to_string(word.index) + " of sentence " +
                        std::to_string(sentence_index) + ")");
      case OovPolicy::kLetters:
        alignment.words.push_back({word.index, letters_of(word.text)});
        break;
      case OovPolicy::kSkip:
        break;
    }
  }
  return alignment;
}

FeatureMatrix upsample(const FeatureMatrix& word_features,
                       const PhonemeAlignment& alignment) {
  const bool per_aligned_word = word_features.rows() == alignment.words.size();
  if (!per_aligned_word && word_features.rows() != alignment.num_words) {
    throw Error(ErrorCode::kDimension,
                "feature matrix has " + std::to_string(word_features.rows()) +
                    " rows but the alignment covers " +
                    std::to_string(alignment.words.size()) + " of " +
                    std::to_string(alignment.num_words) + " words");
  }
  FeatureMatrix out(alignment.total_phonemes(), word_features.schema());
  std::size_t dst = 0;
  for (std::size_t i = 0; i < alignment.words.size(); ++i) {
    const WordPhonemes& word = alignment.words[i];
    if (!per_aligned_word &&
        (word.word_index == 0 || word.word_index > word_features.rows())) {
      throw Error(ErrorCode::kRange, "alignment refers to word " +
                                         std::to_string(word.word_index));
    }
    const auto src =
        word_features.row(per_aligned_word ? i : word.word_index - 1);
    for (std::size_t k = 0; k < word.count(); ++k, ++dst) {
      std::copy(src.begin(), src.end(), out.row(dst).begin());
    }
  }
  return out;
}

}  // namespace synfeat
