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

// synfeat: batch syntactic feature extraction over a treebank.
//
// Reads bracketed constituency trees, extracts phrase-structure and/or
// word-relation features per sentence, optionally upsamples them to phoneme
// level and projects them, and writes one record per sentence plus a JSON
// manifest. Exit codes: 0 ok, 1 bad input tree, 2 label or lexicon policy
// violation, 3 I/O, 4 bad configuration.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "synfeat/synfeat.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

template <auto Free>
struct HandleDeleter {
  template <typename T>
  void operator()(T* p) const { Free(p); }
};

using TreePtr = std::unique_ptr<synfeat_tree, HandleDeleter<synfeat_tree_free>>;
using TreebankPtr =
    std::unique_ptr<synfeat_treebank, HandleDeleter<synfeat_treebank_free>>;
using InventoryPtr =
    std::unique_ptr<synfeat_inventory, HandleDeleter<synfeat_inventory_free>>;
using LexiconPtr =
    std::unique_ptr<synfeat_lexicon, HandleDeleter<synfeat_lexicon_free>>;
using AlignmentPtr =
    std::unique_ptr<synfeat_alignment, HandleDeleter<synfeat_alignment_free>>;
using MatrixPtr =
    std::unique_ptr<synfeat_matrix, HandleDeleter<synfeat_matrix_free>>;
using ProjectionPtr =
    std::unique_ptr<synfeat_projection, HandleDeleter<synfeat_projection_free>>;

enum ExitCode : int {
  kExitOk = 0,
  kExitBadTree = 1,
  kExitPolicy = 2,
  kExitIo = 3,
  kExitConfig = 4,
};

// Failure carrying the process exit code.
struct RunError {
  int exit_code;
  std::string message;
};

int exit_code_for(synfeat_status status) {
  switch (status) {
    case SYNFEAT_ERROR_PARSE: return kExitBadTree;
    case SYNFEAT_ERROR_LABEL:
    case SYNFEAT_ERROR_LEXICON: return kExitPolicy;
    case SYNFEAT_ERROR_IO: return kExitIo;
    default: return kExitConfig;
  }
}

void check(synfeat_status status, const std::string& context) {
  if (status == SYNFEAT_OK) return;
  throw RunError{exit_code_for(status), context + ": " + synfeat_last_error()};
}

struct RunConfig {
  std::string input;
  std::string output;
  std::string manifest;
  std::string features = "wrf";
  std::size_t levels = 10;
  std::string direction = "top-down";
  std::string pos_inventory;
  std::string phrase_inventory;
  bool build_inventories = false;
  std::string save_pos_inventory;
  std::string save_phrase_inventory;
  std::string lexicon;
  std::string level = "word";
  std::string format = "json";
  std::string unknown_labels = "error";
  std::string oov = "error";
  std::string silence = "sil";
  std::optional<std::uint64_t> projection_seed;
  std::size_t projection_dim = 256;
  std::size_t workers = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RunError{kExitIo, "cannot open input " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw RunError{kExitIo, "failed reading " + path};
  return buffer.str();
}

std::string format_float(float v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct BlockInfo {
  std::string name;
  std::size_t offset = 0;
  std::size_t width = 0;
  std::vector<std::string> column_labels;
};

std::vector<BlockInfo> schema_of(const synfeat_matrix* m) {
  std::vector<BlockInfo> blocks;
  for (std::size_t b = 0; b < synfeat_matrix_num_blocks(m); ++b) {
    BlockInfo info;
    const char* name = nullptr;
    check(synfeat_matrix_block(m, b, &name, &info.offset, &info.width),
          "reading schema");
    info.name = name;
    for (std::size_t c = 0; c < info.width; ++c) {
      if (const char* label = synfeat_matrix_block_column_label(m, b, c)) {
        info.column_labels.emplace_back(label);
      }
    }
    blocks.push_back(std::move(info));
  }
  return blocks;
}

json schema_json(const std::vector<BlockInfo>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json block = {{"name", b.name}, {"offset", b.offset}, {"width", b.width}};
    if (!b.column_labels.empty()) block["labels"] = b.column_labels;
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<std::string> column_names(const std::vector<BlockInfo>& blocks) {
  std::vector<std::string> names;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < b.width; ++c) {
      if (!b.column_labels.empty()) {
        names.push_back(b.name + "=" + b.column_labels[c]);
      } else if (b.width == 1) {
        names.push_back(b.name);
      } else {
        names.push_back(b.name + "[" + std::to_string(c) + "]");
      }
    }
  }
  return names;
}

// Read-only state shared by all workers.
struct Pipeline {
  const RunConfig& config;
  InventoryPtr pos;
  InventoryPtr phrase;
  LexiconPtr lexicon;
  ProjectionPtr projection;
  synfeat_unknown_policy unknown_policy = SYNFEAT_UNKNOWN_ERROR;
  synfeat_psf_config psf{};
};

struct SentenceResult {
  std::optional<RunError> error;
  std::string record;  // bytes for the output file
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words = 0;
  std::vector<BlockInfo> schema;
};

MatrixPtr extract(const Pipeline& p, const synfeat_tree* tree) {
  synfeat_matrix* raw = nullptr;
  MatrixPtr psf, wrf;
  if (p.config.features != "wrf") {
    check(synfeat_extract_psf(tree, &p.psf, p.pos.get(), p.phrase.get(),
                              p.unknown_policy, &raw),
          "phrase structure features");
    psf.reset(raw);
  }
  if (p.config.features != "psf") {
    check(synfeat_extract_wrf(tree, p.pos.get(), p.phrase.get(),
                              p.unknown_policy, &raw),
          "word relation features");
    wrf.reset(raw);
  }
  if (psf && wrf) {
    check(synfeat_matrix_hconcat(psf.get(), "psf.", wrf.get(), "wrf.", &raw),
          "concatenating features");
    return MatrixPtr(raw);
  }
  return psf ? std::move(psf) : std::move(wrf);
}

SentenceResult process(const Pipeline& p, const synfeat_tree* tree,
                       std::size_t index, std::size_t line) {
  SentenceResult result;
  try {
    MatrixPtr matrix = extract(p, tree);
    AlignmentPtr alignment;
    synfeat_matrix* raw = nullptr;
    if (p.config.level == "phoneme") {
      synfeat_alignment* a = nullptr;
      check(synfeat_phonemize(tree, p.lexicon.get(), index, &a),
            "sentence " + std::to_string(index) + " (line " +
                std::to_string(line) + ")");
      alignment.reset(a);
      check(synfeat_upsample(matrix.get(), alignment.get(), &raw), "upsampling");
      matrix.reset(raw);
    }
    if (p.projection) {
      check(synfeat_project_relu(matrix.get(), p.projection.get(), &raw),
            "projection");
      matrix.reset(raw);
    }

    const std::size_t rows = synfeat_matrix_rows(matrix.get());
    const std::size_t cols = synfeat_matrix_cols(matrix.get());
    const float* data = synfeat_matrix_data(matrix.get());
    result.rows = rows;
    result.cols = cols;
    result.words = synfeat_tree_num_words(tree);
    result.schema = schema_of(matrix.get());

    // Word index (1-based) that produced each output row.
    std::vector<std::size_t> row_words(rows);
    std::vector<std::string> row_phonemes;
    if (alignment) {
      std::size_t r = 0;
      for (std::size_t e = 0; e < synfeat_alignment_size(alignment.get()); ++e) {
        for (std::size_t k = 0;
             k < synfeat_alignment_phoneme_count(alignment.get(), e); ++k, ++r) {
          row_words[r] = synfeat_alignment_word_index(alignment.get(), e);
          row_phonemes.emplace_back(
              synfeat_alignment_phoneme(alignment.get(), e, k));
        }
      }
    } else {
      for (std::size_t r = 0; r < rows; ++r) row_words[r] = r + 1;
    }

    if (p.config.format == "bin") {
      std::size_t size = 0;
      check(synfeat_matrix_encode(matrix.get(), nullptr, 0, &size), "encoding");
      result.record.resize(size);
      check(synfeat_matrix_encode(
                matrix.get(), reinterpret_cast<unsigned char*>(result.record.data()),
                size, &size),
            "encoding");
    } else if (p.config.format == "json") {
      json words = json::array();
      json tags = json::array();
      for (std::size_t w = 1; w <= result.words; ++w) {
        words.push_back(synfeat_tree_word_text(tree, w));
        tags.push_back(synfeat_tree_word_pos(tree, w));
      }
      json matrix_rows = json::array();
      for (std::size_t r = 0; r < rows; ++r) {
        matrix_rows.push_back(
            std::vector<float>(data + r * cols, data + (r + 1) * cols));
      }
      json record = {{"sentence", index}, {"line", line},
                     {"words", std::move(words)}, {"pos", std::move(tags)},
                     {"schema", schema_json(result.schema)},
                     {"rows", std::move(matrix_rows)}};
      if (alignment) {
        record["row_words"] = row_words;
        record["phonemes"] = row_phonemes;
      }
      result.record = record.dump() + "\n";
    } else {
      std::string out;
      for (std::size_t r = 0; r < rows; ++r) {
        out += std::to_string(index) + "," + std::to_string(r) + "," +
               std::to_string(row_words[r]) + "," +
               csv_field(synfeat_tree_word_text(tree, row_words[r]));
        if (alignment) out += "," + csv_field(row_phonemes[r]);
        for (std::size_t c = 0; c < cols; ++c) {
          out += ',';
          out += format_float(data[r * cols + c]);
        }
        out += '\n';
      }
      result.record = std::move(out);
    }
  } catch (RunError& e) {
    result.error = std::move(e);
  }
  return result;
}

// Runs fn(i) for i in [0, n) on `workers` threads. Results must be written
// to per-index slots so output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

InventoryPtr load_or_default(const std::string& path, synfeat_label_kind kind) {
  synfeat_inventory* raw = nullptr;
  if (path.empty()) {
    check(synfeat_inventory_default(kind, &raw), "default inventory");
  } else {
    check(synfeat_inventory_load(path.c_str(), kind, &raw), "inventory " + path);
  }
  return InventoryPtr(raw);
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RunError{kExitIo, "cannot write " + path.string()};
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw RunError{kExitIo, "failed writing " + path.string()};
}

void validate(const RunConfig& c) {
  auto bad = [](const std::string& msg) { throw RunError{kExitConfig, msg}; };
  if (c.level == "phoneme" && c.lexicon.empty()) {
    bad("--level phoneme requires --lexicon");
  }
  if (c.build_inventories &&
      (!c.pos_inventory.empty() || !c.phrase_inventory.empty())) {
    bad("--build-inventories cannot be combined with inventory paths");
  }
  if (c.levels == 0) bad("--levels must be at least 1");
  if (c.projection_dim == 0) bad("--projection-dim must be at least 1");
}

int run(const RunConfig& config) {
  validate(config);
  const std::string text = read_input(config.input);

  synfeat_treebank* tb_raw = nullptr;
  check(synfeat_treebank_split(text.data(), text.size(), &tb_raw), config.input);
  TreebankPtr treebank(tb_raw);
  const std::size_t n = synfeat_treebank_size(treebank.get());

  Pipeline p{config, {}, {}, {}, {}};
  p.unknown_policy = config.unknown_labels == "zero" ? SYNFEAT_UNKNOWN_ZERO
                                                     : SYNFEAT_UNKNOWN_ERROR;
  p.psf.num_levels = config.levels;
  p.psf.direction =
      config.direction == "bottom-up" ? SYNFEAT_BOTTOM_UP : SYNFEAT_TOP_DOWN;
  if (!config.build_inventories) {
    p.pos = load_or_default(config.pos_inventory, SYNFEAT_LABELS_POS);
    p.phrase = load_or_default(config.phrase_inventory, SYNFEAT_LABELS_PHRASE);
  }

  std::size_t workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  // Parse every tree first; inventories may be built from the whole corpus.
  std::vector<TreePtr> trees(n);
  std::vector<std::optional<RunError>> parse_errors(n);
  const synfeat_inventory* phrase_check =
      config.phrase_inventory.empty() ? nullptr : p.phrase.get();
  parallel_for(n, workers, [&](std::size_t i) {
    const char* tree_text = synfeat_treebank_text(treebank.get(), i);
    synfeat_tree* raw = nullptr;
    const auto status = synfeat_tree_parse(tree_text, std::strlen(tree_text),
                                           phrase_check, &raw);
    if (status != SYNFEAT_OK) {
      parse_errors[i] = RunError{
          exit_code_for(status),
          config.input + ":" +
              std::to_string(synfeat_treebank_line(treebank.get(), i)) +
              ": " + synfeat_last_error()};
    }
    trees[i].reset(raw);
  });
  for (auto& e : parse_errors) {
    if (e) throw std::move(*e);
  }

  if (config.build_inventories && n > 0) {
    std::vector<const synfeat_tree*> views;
    for (const auto& t : trees) views.push_back(t.get());
    synfeat_inventory* raw = nullptr;
    check(synfeat_inventory_build(views.data(), n, SYNFEAT_LABELS_POS, &raw),
          "building POS inventory");
    p.pos.reset(raw);
    check(synfeat_inventory_build(views.data(), n, SYNFEAT_LABELS_PHRASE, &raw),
          "building phrase inventory");
    p.phrase.reset(raw);
  }
  if (p.pos && !config.save_pos_inventory.empty()) {
    check(synfeat_inventory_save(p.pos.get(), config.save_pos_inventory.c_str()),
          "saving POS inventory");
  }
  if (p.phrase && !config.save_phrase_inventory.empty()) {
    check(synfeat_inventory_save(p.phrase.get(),
                                 config.save_phrase_inventory.c_str()),
          "saving phrase inventory");
  }

  if (!config.lexicon.empty()) {
    synfeat_lexicon_options opts = synfeat_lexicon_options_default();
    opts.silence_symbol = config.silence.c_str();
    opts.oov_policy = config.oov == "letters" ? SYNFEAT_OOV_LETTERS
                      : config.oov == "skip"  ? SYNFEAT_OOV_SKIP
                                              : SYNFEAT_OOV_ERROR;
    synfeat_lexicon* raw = nullptr;
    check(synfeat_lexicon_load(config.lexicon.c_str(), &opts, &raw),
          "lexicon " + config.lexicon);
    p.lexicon.reset(raw);
  }

  if (config.projection_seed && p.pos) {
    const std::size_t pos_n = synfeat_inventory_size(p.pos.get());
    const std::size_t phrase_n = synfeat_inventory_size(p.phrase.get());
    std::size_t in_dim = 0;
    if (config.features != "wrf") {
      in_dim += synfeat_psf_width(pos_n, phrase_n, config.levels);
    }
    if (config.features != "psf") in_dim += synfeat_wrf_width(pos_n, phrase_n);
    synfeat_projection* raw = nullptr;
    check(synfeat_projection_init(*config.projection_seed, in_dim,
                                  config.projection_dim, &raw),
          "projection");
    p.projection.reset(raw);
  }

  std::vector<SentenceResult> results(n);
  parallel_for(n, workers, [&](std::size_t i) {
    results[i] = process(p, trees[i].get(), i,
                         synfeat_treebank_line(treebank.get(), i));
  });
  for (auto& r : results) {
    if (r.error) throw std::move(*r.error);
  }

  std::string body;
  if (config.format == "csv" && n > 0) {
    std::string header = "sentence,row,word_index,word";
    if (config.level == "phoneme") header += ",phoneme";
    for (const auto& name : column_names(results.front().schema)) {
      header += "," + csv_field(name);
    }
    body = header + "\n";
  }
  for (const auto& r : results) body += r.record;

  json sentences = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    sentences.push_back({{"index", i},
                         {"line", synfeat_treebank_line(treebank.get(), i)},
                         {"words", results[i].words},
                         {"rows", results[i].rows},
                         {"cols", results[i].cols}});
  }
  json manifest = {
      {"format", config.format},
      {"features", config.features},
      {"level", config.level},
      {"columns", n > 0 ? results.front().cols : 0},
      {"schema", n > 0 ? schema_json(results.front().schema) : json::array()},
      {"sentences", std::move(sentences)},
  };
  if (config.features != "wrf") {
    manifest["psf"] = {{"levels", config.levels},
                       {"direction", config.direction}};
  }
  if (config.projection_seed) {
    manifest["projection"] = {{"seed", *config.projection_seed},
                              {"dim", config.projection_dim}};
  }

  // Stage to temporary files so a failure never leaves partial output.
  const fs::path output(config.output);
  const fs::path manifest_path(config.manifest.empty()
                                   ? config.output + ".manifest.json"
                                   : config.manifest);
  const fs::path output_tmp = output.string() + ".tmp";
  const fs::path manifest_tmp = manifest_path.string() + ".tmp";
  try {
    write_file(output_tmp, body);
    write_file(manifest_tmp, manifest.dump(2) + "\n");
    fs::rename(output_tmp, output);
    fs::rename(manifest_tmp, manifest_path);
  } catch (...) {
    std::error_code ignored;
    fs::remove(output_tmp, ignored);
    fs::remove(manifest_tmp, ignored);
    throw;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Extract syntactic features from constituency parse trees"};
  app.set_config("--config", "", "Config file with key = value lines");

  app.add_option("-i,--input", config.input, "Treebank file, '-' for stdin")
      ->required();
  app.add_option("-o,--output", config.output, "Output file")->required();
  app.add_option("--manifest", config.manifest,
                 "Manifest path (default: <output>.manifest.json)");
  app.add_option("--features", config.features, "Feature set")
      ->check(CLI::IsMember({"psf", "wrf", "both"}))
      ->capture_default_str();
  app.add_option("--levels", config.levels, "Phrase layers per word")
      ->capture_default_str();
  app.add_option("--direction", config.direction, "Layer selection order")
      ->check(CLI::IsMember({"top-down", "bottom-up"}))
      ->capture_default_str();
  app.add_option("--pos-inventory", config.pos_inventory, "POS label file");
  app.add_option("--phrase-inventory", config.phrase_inventory,
                 "Phrase label file");
  app.add_flag("--build-inventories", config.build_inventories,
               "Collect inventories from the input corpus");
  app.add_option("--save-pos-inventory", config.save_pos_inventory,
                 "Write the POS inventory used");
  app.add_option("--save-phrase-inventory", config.save_phrase_inventory,
                 "Write the phrase inventory used");
  app.add_option("--lexicon", config.lexicon, "CMUdict-style lexicon");
  app.add_option("--level", config.level, "Output rows per word or phoneme")
      ->check(CLI::IsMember({"word", "phoneme"}))
      ->capture_default_str();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "bin"}))
      ->capture_default_str();
  app.add_option("--unknown-labels", config.unknown_labels,
                 "Labels missing from an inventory")
      ->check(CLI::IsMember({"error", "zero"}))
      ->capture_default_str();
  app.add_option("--oov", config.oov, "Words missing from the lexicon")
      ->check(CLI::IsMember({"error", "letters", "skip"}))
      ->capture_default_str();
  app.add_option("--silence", config.silence, "Phoneme for punctuation")
      ->capture_default_str();
  app.add_option("--projection-seed", config.projection_seed,
                 "Apply a seeded ReLU projection");
  app.add_option("--projection-dim", config.projection_dim,
                 "Projection output width")
      ->capture_default_str();
  app.add_option("--workers", config.workers,
                 "Worker threads (0: one per core)")
      ->envname("SYNFEAT_WORKERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    return run(config);
  } catch (const RunError& e) {
    std::cerr << "synfeat: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "synfeat: " << e.what() << "\n";
    return kExitIo;
  }
}
