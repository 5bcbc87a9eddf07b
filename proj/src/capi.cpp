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

#include "synfeat/synfeat.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "synfeat/conditioning.hpp"
#include "synfeat/error.hpp"
#include "synfeat/feature_matrix.hpp"
#include "synfeat/inventory.hpp"
#include "synfeat/matrix_io.hpp"
#include "synfeat/phonemes.hpp"
#include "synfeat/psf.hpp"
#include "synfeat/treebank.hpp"
#include "synfeat/wrf.hpp"

struct synfeat_tree {
  synfeat::SyntaxTree value;
};
struct synfeat_treebank {
  std::vector<synfeat::TreeText> value;
};
struct synfeat_inventory {
  synfeat::LabelInventory value;
};
struct synfeat_lexicon {
  synfeat::Lexicon value;
};
struct synfeat_alignment {
  synfeat::PhonemeAlignment value;
};
struct synfeat_matrix {
  synfeat::FeatureMatrix value;
};
struct synfeat_projection {
  synfeat::Projection value;
};

namespace {

thread_local std::string last_error;
thread_local std::int64_t last_error_offset = -1;

synfeat_status status_of(synfeat::ErrorCode code) {
  using synfeat::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return SYNFEAT_ERROR_PARSE;
    case ErrorCode::kLabel: return SYNFEAT_ERROR_LABEL;
    case ErrorCode::kLexicon: return SYNFEAT_ERROR_LEXICON;
    case ErrorCode::kRange: return SYNFEAT_ERROR_RANGE;
    case ErrorCode::kDimension: return SYNFEAT_ERROR_DIMENSION;
    case ErrorCode::kIo: return SYNFEAT_ERROR_IO;
    case ErrorCode::kInvalidArgument: return SYNFEAT_ERROR_INVALID_ARGUMENT;
  }
  return SYNFEAT_ERROR_INTERNAL;
}

synfeat_status fail(synfeat_status status, std::string message,
                    std::int64_t offset = -1) {
  last_error = std::move(message);
  last_error_offset = offset;
  return status;
}

// Runs `body`, translating exceptions into status codes. Nothing may throw
// across the C boundary.
template <typename Body>
synfeat_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const synfeat::Error& e) {
    return fail(status_of(e.code()), e.what(),
                e.offset() ? static_cast<std::int64_t>(*e.offset()) : -1);
  } catch (const std::bad_alloc&) {
    return fail(SYNFEAT_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SYNFEAT_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SYNFEAT_ERROR_INTERNAL, "unknown exception");
  }
}

synfeat_status null_argument(const char* name) {
  return fail(SYNFEAT_ERROR_INVALID_ARGUMENT,
              std::string("argument '") + name + "' must not be NULL");
}

#define SYNFEAT_REQUIRE(arg) \
  if ((arg) == nullptr) return null_argument(#arg)

synfeat::LabelKind kind_of(synfeat_label_kind kind) {
  return kind == SYNFEAT_LABELS_POS ? synfeat::LabelKind::kPos
                                    : synfeat::LabelKind::kPhrase;
}

synfeat::UnknownLabelPolicy policy_of(synfeat_unknown_policy policy) {
  return policy == SYNFEAT_UNKNOWN_ZERO ? synfeat::UnknownLabelPolicy::kZero
                                        : synfeat::UnknownLabelPolicy::kError;
}

synfeat_status write_buffer(const std::string& bytes, void* buffer,
                            std::size_t capacity, std::size_t* required,
                            bool terminate) {
  if (required) *required = bytes.size();
  const std::size_t needed = bytes.size() + (terminate ? 1 : 0);
  if (buffer == nullptr || capacity < needed) {
    if (buffer == nullptr && capacity == 0) return SYNFEAT_OK;  // size query
    return fail(SYNFEAT_ERROR_RANGE, "buffer too small: need " +
                                         std::to_string(needed) + " bytes");
  }
  std::memcpy(buffer, bytes.data(), bytes.size());
  if (terminate) static_cast<char*>(buffer)[bytes.size()] = '\0';
  return SYNFEAT_OK;
}

template <typename Handle, typename Value>
synfeat_status emit(Handle** out, Value&& value) {
  *out = new Handle{std::forward<Value>(value)};
  return SYNFEAT_OK;
}

}  // namespace

extern "C" {

const char* synfeat_version(void) { return "0.1.0"; }

const char* synfeat_status_name(synfeat_status status) {
  switch (status) {
    case SYNFEAT_OK: return "ok";
    case SYNFEAT_ERROR_PARSE: return "parse error";
    case SYNFEAT_ERROR_LABEL: return "label error";
    case SYNFEAT_ERROR_LEXICON: return "lexicon error";
    case SYNFEAT_ERROR_RANGE: return "range error";
    case SYNFEAT_ERROR_DIMENSION: return "dimension error";
    case SYNFEAT_ERROR_IO: return "I/O error";
    case SYNFEAT_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SYNFEAT_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* synfeat_last_error(void) { return last_error.c_str(); }

int64_t synfeat_last_error_offset(void) { return last_error_offset; }

// ---- trees ----------------------------------------------------------------

synfeat_status synfeat_tree_parse(const char* text, size_t length,
                                  const synfeat_inventory* phrase_labels,
                                  synfeat_tree** out) {
  SYNFEAT_REQUIRE(out);
  if (text == nullptr && length != 0) return null_argument("text");
  return guarded([&] {
    synfeat::ParseOptions options;
    if (phrase_labels) options.phrase_labels = phrase_labels->value.labels();
    return emit(out, synfeat::parse_bracketed(
                         std::string_view(text ? text : "", length), options));
  });
}

void synfeat_tree_free(synfeat_tree* tree) { delete tree; }

size_t synfeat_tree_num_words(const synfeat_tree* tree) {
  return tree ? tree->value.num_words() : 0;
}

const char* synfeat_tree_word_text(const synfeat_tree* tree, size_t index) {
  if (!tree || index == 0 || index > tree->value.num_words()) return nullptr;
  return tree->value.word(index).text.c_str();
}

const char* synfeat_tree_word_pos(const synfeat_tree* tree, size_t index) {
  if (!tree || index == 0 || index > tree->value.num_words()) return nullptr;
  return tree->value.pos(index).c_str();
}

synfeat_status synfeat_tree_serialize(const synfeat_tree* tree, char* buffer,
                                      size_t capacity, size_t* required) {
  SYNFEAT_REQUIRE(tree);
  return guarded([&] {
    return write_buffer(synfeat::serialize(tree->value), buffer, capacity,
                        required, true);
  });
}

synfeat_status synfeat_treebank_split(const char* text, size_t length,
                                      synfeat_treebank** out) {
  SYNFEAT_REQUIRE(out);
  if (text == nullptr && length != 0) return null_argument("text");
  return guarded([&] {
    return emit(out, synfeat::split_treebank(
                         std::string_view(text ? text : "", length)));
  });
}

void synfeat_treebank_free(synfeat_treebank* treebank) { delete treebank; }

size_t synfeat_treebank_size(const synfeat_treebank* treebank) {
  return treebank ? treebank->value.size() : 0;
}

const char* synfeat_treebank_text(const synfeat_treebank* treebank,
                                  size_t index) {
  if (!treebank || index >= treebank->value.size()) return nullptr;
  return treebank->value[index].text.c_str();
}

size_t synfeat_treebank_line(const synfeat_treebank* treebank, size_t index) {
  if (!treebank || index >= treebank->value.size()) return 0;
  return treebank->value[index].line;
}

// ---- inventories -----------------------------------------------------------

synfeat_status synfeat_inventory_default(synfeat_label_kind kind,
                                         synfeat_inventory** out) {
  SYNFEAT_REQUIRE(out);
  return guarded(
      [&] { return emit(out, synfeat::default_inventory(kind_of(kind))); });
}

synfeat_status synfeat_inventory_load(const char* path, synfeat_label_kind kind,
                                      synfeat_inventory** out) {
  SYNFEAT_REQUIRE(path);
  SYNFEAT_REQUIRE(out);
  return guarded(
      [&] { return emit(out, synfeat::load_inventory(path, kind_of(kind))); });
}

synfeat_status synfeat_inventory_save(const synfeat_inventory* inventory,
                                      const char* path) {
  SYNFEAT_REQUIRE(inventory);
  SYNFEAT_REQUIRE(path);
  return guarded([&] {
    synfeat::save_inventory(inventory->value, path);
    return SYNFEAT_OK;
  });
}

synfeat_status synfeat_inventory_build(const synfeat_tree* const* trees,
                                       size_t num_trees,
                                       synfeat_label_kind kind,
                                       synfeat_inventory** out) {
  SYNFEAT_REQUIRE(out);
  if (trees == nullptr && num_trees != 0) return null_argument("trees");
  return guarded([&] {
    std::vector<synfeat::SyntaxTree> corpus;
    corpus.reserve(num_trees);
    for (size_t i = 0; i < num_trees; ++i) {
      if (trees[i] == nullptr) return null_argument("trees[i]");
      corpus.push_back(trees[i]->value);
    }
    return emit(out, synfeat::build_inventory_from_corpus(corpus, kind_of(kind)));
  });
}

void synfeat_inventory_free(synfeat_inventory* inventory) { delete inventory; }

size_t synfeat_inventory_size(const synfeat_inventory* inventory) {
  return inventory ? inventory->value.size() : 0;
}

const char* synfeat_inventory_label(const synfeat_inventory* inventory,
                                    size_t index) {
  if (!inventory || index >= inventory->value.size()) return nullptr;
  return inventory->value.labels()[index].c_str();
}

// ---- feature extraction ----------------------------------------------------

synfeat_psf_config synfeat_psf_config_default(void) {
  const synfeat::PsfConfig defaults;
  return {defaults.num_levels, SYNFEAT_TOP_DOWN};
}

size_t synfeat_psf_width(size_t pos_labels, size_t phrase_labels,
                         size_t num_levels) {
  return synfeat::psf_width(pos_labels, phrase_labels, num_levels);
}

size_t synfeat_wrf_width(size_t pos_labels, size_t phrase_labels) {
  return synfeat::wrf_width(pos_labels, phrase_labels);
}

synfeat_status synfeat_extract_psf(const synfeat_tree* tree,
                                   const synfeat_psf_config* config,
                                   const synfeat_inventory* pos,
                                   const synfeat_inventory* phrase,
                                   synfeat_unknown_policy policy,
                                   synfeat_matrix** out) {
  SYNFEAT_REQUIRE(tree);
  SYNFEAT_REQUIRE(pos);
  SYNFEAT_REQUIRE(phrase);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    synfeat::PsfConfig cfg;
    if (config) {
      cfg.num_levels = config->num_levels;
      cfg.direction = config->direction == SYNFEAT_BOTTOM_UP
                          ? synfeat::LayerDirection::kBottomUp
                          : synfeat::LayerDirection::kTopDown;
    }
    return emit(out, synfeat::extract_psf(tree->value, cfg, pos->value,
                                          phrase->value, policy_of(policy)));
  });
}

synfeat_status synfeat_extract_wrf(const synfeat_tree* tree,
                                   const synfeat_inventory* pos,
                                   const synfeat_inventory* phrase,
                                   synfeat_unknown_policy policy,
                                   synfeat_matrix** out) {
  SYNFEAT_REQUIRE(tree);
  SYNFEAT_REQUIRE(pos);
  SYNFEAT_REQUIRE(phrase);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    return emit(out, synfeat::extract_wrf(tree->value, pos->value,
                                          phrase->value, policy_of(policy)));
  });
}

// ---- phonemes ----------------------------------------------------------------

synfeat_lexicon_options synfeat_lexicon_options_default(void) {
  return {nullptr, SYNFEAT_OOV_ERROR, nullptr, 0};
}

synfeat_status synfeat_lexicon_load(const char* path,
                                    const synfeat_lexicon_options* options,
                                    synfeat_lexicon** out) {
  SYNFEAT_REQUIRE(path);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    synfeat::LexiconOptions opts;
    if (options) {
      if (options->silence_symbol) opts.silence_symbol = options->silence_symbol;
      switch (options->oov_policy) {
        case SYNFEAT_OOV_LETTERS: opts.oov_policy = synfeat::OovPolicy::kLetters; break;
        case SYNFEAT_OOV_SKIP: opts.oov_policy = synfeat::OovPolicy::kSkip; break;
        default: opts.oov_policy = synfeat::OovPolicy::kError; break;
      }
      for (size_t i = 0; options->punctuation_tags && i < options->num_punctuation_tags; ++i) {
        opts.punctuation_tags.emplace_back(options->punctuation_tags[i]);
      }
    }
    return emit(out, synfeat::load_lexicon(path, std::move(opts)));
  });
}

void synfeat_lexicon_free(synfeat_lexicon* lexicon) { delete lexicon; }

synfeat_status synfeat_phonemize(const synfeat_tree* tree,
                                 const synfeat_lexicon* lexicon,
                                 size_t sentence_index,
                                 synfeat_alignment** out) {
  SYNFEAT_REQUIRE(tree);
  SYNFEAT_REQUIRE(lexicon);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    return emit(out, synfeat::phonemize(tree->value, lexicon->value,
                                        sentence_index));
  });
}

void synfeat_alignment_free(synfeat_alignment* alignment) { delete alignment; }

size_t synfeat_alignment_size(const synfeat_alignment* alignment) {
  return alignment ? alignment->value.words.size() : 0;
}

size_t synfeat_alignment_total_phonemes(const synfeat_alignment* alignment) {
  return alignment ? alignment->value.total_phonemes() : 0;
}

size_t synfeat_alignment_word_index(const synfeat_alignment* alignment,
                                    size_t entry) {
  if (!alignment || entry >= alignment->value.words.size()) return 0;
  return alignment->value.words[entry].word_index;
}

size_t synfeat_alignment_phoneme_count(const synfeat_alignment* alignment,
                                       size_t entry) {
  if (!alignment || entry >= alignment->value.words.size()) return 0;
  return alignment->value.words[entry].count();
}

const char* synfeat_alignment_phoneme(const synfeat_alignment* alignment,
                                      size_t entry, size_t phoneme) {
  if (!alignment || entry >= alignment->value.words.size()) return nullptr;
  const auto& phonemes = alignment->value.words[entry].phonemes;
  return phoneme < phonemes.size() ? phonemes[phoneme].c_str() : nullptr;
}

synfeat_status synfeat_upsample(const synfeat_matrix* word_features,
                                const synfeat_alignment* alignment,
                                synfeat_matrix** out) {
  SYNFEAT_REQUIRE(word_features);
  SYNFEAT_REQUIRE(alignment);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    return emit(out, synfeat::upsample(word_features->value, alignment->value));
  });
}

// ---- conditioning ------------------------------------------------------------

synfeat_status synfeat_projection_init(uint64_t seed, size_t in_dim,
                                       size_t out_dim,
                                       synfeat_projection** out) {
  SYNFEAT_REQUIRE(out);
  return guarded(
      [&] { return emit(out, synfeat::Projection(seed, in_dim, out_dim)); });
}

void synfeat_projection_free(synfeat_projection* projection) {
  delete projection;
}

size_t synfeat_projection_in_dim(const synfeat_projection* p) {
  return p ? p->value.in_dim() : 0;
}

size_t synfeat_projection_out_dim(const synfeat_projection* p) {
  return p ? p->value.out_dim() : 0;
}

synfeat_status synfeat_project_relu(const synfeat_matrix* features,
                                    const synfeat_projection* projection,
                                    synfeat_matrix** out) {
  SYNFEAT_REQUIRE(features);
  SYNFEAT_REQUIRE(projection);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    return emit(out, synfeat::project_relu(features->value, projection->value));
  });
}

// ---- matrices ----------------------------------------------------------------

void synfeat_matrix_free(synfeat_matrix* matrix) { delete matrix; }

size_t synfeat_matrix_rows(const synfeat_matrix* matrix) {
  return matrix ? matrix->value.rows() : 0;
}

size_t synfeat_matrix_cols(const synfeat_matrix* matrix) {
  return matrix ? matrix->value.cols() : 0;
}

const float* synfeat_matrix_data(const synfeat_matrix* matrix) {
  return matrix ? matrix->value.data().data() : nullptr;
}

synfeat_status synfeat_matrix_copy_data(const synfeat_matrix* matrix,
                                        float* buffer, size_t capacity) {
  SYNFEAT_REQUIRE(matrix);
  const auto data = matrix->value.data();
  if (data.empty()) return SYNFEAT_OK;
  SYNFEAT_REQUIRE(buffer);
  if (capacity < data.size()) {
    return fail(SYNFEAT_ERROR_RANGE, "buffer holds " + std::to_string(capacity) +
                                         " floats, matrix has " +
                                         std::to_string(data.size()));
  }
  std::memcpy(buffer, data.data(), data.size() * sizeof(float));
  return SYNFEAT_OK;
}

size_t synfeat_matrix_num_blocks(const synfeat_matrix* matrix) {
  return matrix ? matrix->value.schema().size() : 0;
}

synfeat_status synfeat_matrix_block(const synfeat_matrix* matrix, size_t block,
                                    const char** name, size_t* offset,
                                    size_t* width) {
  SYNFEAT_REQUIRE(matrix);
  const auto& schema = matrix->value.schema();
  if (block >= schema.size()) {
    return fail(SYNFEAT_ERROR_RANGE,
                "block " + std::to_string(block) + " out of range");
  }
  if (name) *name = schema[block].name.c_str();
  if (offset) *offset = schema[block].offset;
  if (width) *width = schema[block].width;
  return SYNFEAT_OK;
}

const char* synfeat_matrix_block_column_label(const synfeat_matrix* matrix,
                                              size_t block, size_t column) {
  if (!matrix || block >= matrix->value.schema().size()) return nullptr;
  const auto& labels = matrix->value.schema()[block].column_labels;
  return column < labels.size() ? labels[column].c_str() : nullptr;
}

synfeat_status synfeat_matrix_hconcat(const synfeat_matrix* left,
                                      const char* left_prefix,
                                      const synfeat_matrix* right,
                                      const char* right_prefix,
                                      synfeat_matrix** out) {
  SYNFEAT_REQUIRE(left);
  SYNFEAT_REQUIRE(right);
  SYNFEAT_REQUIRE(out);
  return guarded([&] {
    return emit(out, synfeat::hconcat(left->value, left_prefix ? left_prefix : "",
                                      right->value,
                                      right_prefix ? right_prefix : ""));
  });
}

synfeat_status synfeat_matrix_encode(const synfeat_matrix* matrix,
                                     unsigned char* buffer, size_t capacity,
                                     size_t* required) {
  SYNFEAT_REQUIRE(matrix);
  return guarded([&] {
    return write_buffer(synfeat::encode_matrix(matrix->value), buffer,
                        capacity, required, false);
  });
}

synfeat_status synfeat_matrix_decode(const unsigned char* bytes, size_t length,
                                     size_t* consumed, synfeat_matrix** out) {
  SYNFEAT_REQUIRE(out);
  if (bytes == nullptr && length != 0) return null_argument("bytes");
  return guarded([&] {
    std::size_t used = 0;
    auto matrix = synfeat::decode_matrix(
        std::span<const std::byte>(reinterpret_cast<const std::byte*>(bytes),
                                   length),
        used);
    if (consumed) *consumed = used;
    return emit(out, std::move(matrix));
  });
}

}  // extern "C"
