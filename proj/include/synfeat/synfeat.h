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

/*
 * synfeat C API.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions that can fail return a synfeat_status;
 * on failure the message is available from synfeat_last_error() on the same
 * thread until the next failing call on that thread. Handles are immutable
 * once created and may be shared between threads.
 */
#ifndef SYNFEAT_SYNFEAT_H_
#define SYNFEAT_SYNFEAT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYNFEAT_BUILDING_LIBRARY)
#    define SYNFEAT_API __declspec(dllexport)
#  else
#    define SYNFEAT_API __declspec(dllimport)
#  endif
#else
#  define SYNFEAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum synfeat_status {
  SYNFEAT_OK = 0,
  SYNFEAT_ERROR_PARSE = 1,
  SYNFEAT_ERROR_LABEL = 2,
  SYNFEAT_ERROR_LEXICON = 3,
  SYNFEAT_ERROR_RANGE = 4,
  SYNFEAT_ERROR_DIMENSION = 5,
  SYNFEAT_ERROR_IO = 6,
  SYNFEAT_ERROR_INVALID_ARGUMENT = 7,
  SYNFEAT_ERROR_INTERNAL = 8
} synfeat_status;

typedef enum synfeat_label_kind {
  SYNFEAT_LABELS_POS = 0,
  SYNFEAT_LABELS_PHRASE = 1
} synfeat_label_kind;

typedef enum synfeat_unknown_policy {
  SYNFEAT_UNKNOWN_ERROR = 0,
  SYNFEAT_UNKNOWN_ZERO = 1
} synfeat_unknown_policy;

typedef enum synfeat_direction {
  SYNFEAT_TOP_DOWN = 0,
  SYNFEAT_BOTTOM_UP = 1
} synfeat_direction;

typedef enum synfeat_oov_policy {
  SYNFEAT_OOV_ERROR = 0,
  SYNFEAT_OOV_LETTERS = 1,
  SYNFEAT_OOV_SKIP = 2
} synfeat_oov_policy;

typedef struct synfeat_tree synfeat_tree;
typedef struct synfeat_treebank synfeat_treebank;
typedef struct synfeat_inventory synfeat_inventory;
typedef struct synfeat_lexicon synfeat_lexicon;
typedef struct synfeat_alignment synfeat_alignment;
typedef struct synfeat_matrix synfeat_matrix;
typedef struct synfeat_projection synfeat_projection;

typedef struct synfeat_psf_config {
  size_t num_levels;
  synfeat_direction direction;
} synfeat_psf_config;

typedef struct synfeat_lexicon_options {
  const char* silence_symbol;            /* NULL means "sil" */
  synfeat_oov_policy oov_policy;
  const char* const* punctuation_tags;   /* NULL means PTB punctuation */
  size_t num_punctuation_tags;
} synfeat_lexicon_options;

SYNFEAT_API const char* synfeat_version(void);
SYNFEAT_API const char* synfeat_status_name(synfeat_status status);

/* Message of the most recent failure on the calling thread, or "". */
SYNFEAT_API const char* synfeat_last_error(void);
/* Character offset of the most recent parse failure, or -1. */
SYNFEAT_API int64_t synfeat_last_error_offset(void);

/* ---- trees ------------------------------------------------------------ */

/* Parses one bracketed tree. `phrase_labels` (may be NULL for the PTB set)
 * lists labels that may never sit directly above a word. */
SYNFEAT_API synfeat_status synfeat_tree_parse(
    const char* text, size_t length, const synfeat_inventory* phrase_labels,
    synfeat_tree** out);
SYNFEAT_API void synfeat_tree_free(synfeat_tree* tree);
SYNFEAT_API size_t synfeat_tree_num_words(const synfeat_tree* tree);
/* 1-based index; NULL when out of range. Valid while the tree lives. */
SYNFEAT_API const char* synfeat_tree_word_text(const synfeat_tree* tree,
                                               size_t index);
SYNFEAT_API const char* synfeat_tree_word_pos(const synfeat_tree* tree,
                                              size_t index);
/* Writes the canonical form plus a NUL terminator if it fits in `capacity`;
 * `*required` always receives the length without the terminator. */
SYNFEAT_API synfeat_status synfeat_tree_serialize(const synfeat_tree* tree,
                                                  char* buffer,
                                                  size_t capacity,
                                                  size_t* required);

/* Splits a treebank stream into individual tree texts. */
SYNFEAT_API synfeat_status synfeat_treebank_split(const char* text,
                                                  size_t length,
                                                  synfeat_treebank** out);
SYNFEAT_API void synfeat_treebank_free(synfeat_treebank* treebank);
SYNFEAT_API size_t synfeat_treebank_size(const synfeat_treebank* treebank);
SYNFEAT_API const char* synfeat_treebank_text(const synfeat_treebank* treebank,
                                              size_t index);
SYNFEAT_API size_t synfeat_treebank_line(const synfeat_treebank* treebank,
                                         size_t index);

/* ---- inventories -------------------------------------------------------- */

SYNFEAT_API synfeat_status synfeat_inventory_default(synfeat_label_kind kind,
                                                     synfeat_inventory** out);
SYNFEAT_API synfeat_status synfeat_inventory_load(const char* path,
                                                  synfeat_label_kind kind,
                                                  synfeat_inventory** out);
SYNFEAT_API synfeat_status synfeat_inventory_save(
    const synfeat_inventory* inventory, const char* path);
SYNFEAT_API synfeat_status synfeat_inventory_build(
    const synfeat_tree* const* trees, size_t num_trees, synfeat_label_kind kind,
    synfeat_inventory** out);
SYNFEAT_API void synfeat_inventory_free(synfeat_inventory* inventory);
SYNFEAT_API size_t synfeat_inventory_size(const synfeat_inventory* inventory);
SYNFEAT_API const char* synfeat_inventory_label(
    const synfeat_inventory* inventory, size_t index);

/* ---- feature extraction ------------------------------------------------- */

SYNFEAT_API synfeat_psf_config synfeat_psf_config_default(void);
/* Row widths for the given inventory sizes. */
SYNFEAT_API size_t synfeat_psf_width(size_t pos_labels, size_t phrase_labels,
                                     size_t num_levels);
SYNFEAT_API size_t synfeat_wrf_width(size_t pos_labels, size_t phrase_labels);
SYNFEAT_API synfeat_status synfeat_extract_psf(
    const synfeat_tree* tree, const synfeat_psf_config* config,
    const synfeat_inventory* pos, const synfeat_inventory* phrase,
    synfeat_unknown_policy policy, synfeat_matrix** out);
SYNFEAT_API synfeat_status synfeat_extract_wrf(
    const synfeat_tree* tree, const synfeat_inventory* pos,
    const synfeat_inventory* phrase, synfeat_unknown_policy policy,
    synfeat_matrix** out);

/* ---- phonemes ------------------------------------------------------------- */

SYNFEAT_API synfeat_lexicon_options synfeat_lexicon_options_default(void);
SYNFEAT_API synfeat_status synfeat_lexicon_load(
    const char* path, const synfeat_lexicon_options* options,
    synfeat_lexicon** out);
SYNFEAT_API void synfeat_lexicon_free(synfeat_lexicon* lexicon);

SYNFEAT_API synfeat_status synfeat_phonemize(const synfeat_tree* tree,
                                             const synfeat_lexicon* lexicon,
                                             size_t sentence_index,
                                             synfeat_alignment** out);
SYNFEAT_API void synfeat_alignment_free(synfeat_alignment* alignment);
/* Number of aligned (non-skipped) words. */
SYNFEAT_API size_t synfeat_alignment_size(const synfeat_alignment* alignment);
SYNFEAT_API size_t synfeat_alignment_total_phonemes(
    const synfeat_alignment* alignment);
SYNFEAT_API size_t synfeat_alignment_word_index(
    const synfeat_alignment* alignment, size_t entry);
SYNFEAT_API size_t synfeat_alignment_phoneme_count(
    const synfeat_alignment* alignment, size_t entry);
SYNFEAT_API const char* synfeat_alignment_phoneme(
    const synfeat_alignment* alignment, size_t entry, size_t phoneme);

SYNFEAT_API synfeat_status synfeat_upsample(const synfeat_matrix* word_features,
                                            const synfeat_alignment* alignment,
                                            synfeat_matrix** out);

/* ---- conditioning projection ---------------------------------------------- */

SYNFEAT_API synfeat_status synfeat_projection_init(uint64_t seed,
                                                   size_t in_dim,
                                                   size_t out_dim,
                                                   synfeat_projection** out);
SYNFEAT_API void synfeat_projection_free(synfeat_projection* projection);
SYNFEAT_API size_t synfeat_projection_in_dim(const synfeat_projection* p);
SYNFEAT_API size_t synfeat_projection_out_dim(const synfeat_projection* p);
SYNFEAT_API synfeat_status synfeat_project_relu(
    const synfeat_matrix* features, const synfeat_projection* projection,
    synfeat_matrix** out);

/* ---- matrices --------------------------------------------------------------- */

SYNFEAT_API void synfeat_matrix_free(synfeat_matrix* matrix);
SYNFEAT_API size_t synfeat_matrix_rows(const synfeat_matrix* matrix);
SYNFEAT_API size_t synfeat_matrix_cols(const synfeat_matrix* matrix);
/* Row-major values, valid while the matrix lives. */
SYNFEAT_API const float* synfeat_matrix_data(const synfeat_matrix* matrix);
/* Copies rows*cols floats into `buffer`; fails if `capacity` is smaller. */
SYNFEAT_API synfeat_status synfeat_matrix_copy_data(
    const synfeat_matrix* matrix, float* buffer, size_t capacity);
SYNFEAT_API size_t synfeat_matrix_num_blocks(const synfeat_matrix* matrix);
SYNFEAT_API synfeat_status synfeat_matrix_block(const synfeat_matrix* matrix,
                                                size_t block,
                                                const char** name,
                                                size_t* offset, size_t* width);
/* Per-column label inside a block, or NULL when the block has none. */
SYNFEAT_API const char* synfeat_matrix_block_column_label(
    const synfeat_matrix* matrix, size_t block, size_t column);
SYNFEAT_API synfeat_status synfeat_matrix_hconcat(
    const synfeat_matrix* left, const char* left_prefix,
    const synfeat_matrix* right, const char* right_prefix,
    synfeat_matrix** out);

/* Binary "SYNF" record. Same buffer protocol as synfeat_tree_serialize
 * (no terminator is written). */
SYNFEAT_API synfeat_status synfeat_matrix_encode(const synfeat_matrix* matrix,
                                                 unsigned char* buffer,
                                                 size_t capacity,
                                                 size_t* required);
SYNFEAT_API synfeat_status synfeat_matrix_decode(const unsigned char* bytes,
                                                 size_t length,
                                                 size_t* consumed,
                                                 synfeat_matrix** out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SYNFEAT_SYNFEAT_H_ */
