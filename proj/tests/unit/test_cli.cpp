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

#include <sys/wait.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "support/fixtures.hpp"
#include "synfeat/matrix_io.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using synfeat::testing::data_path;
using synfeat::testing::kCanonicalTree;

class Workdir {
 public:
  Workdir() {
    static int counter = 0;
    dir_ = fs::temp_directory_path() /
           ("synfeat_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
    return path(name);
  }

  // Runs the CLI with stderr captured; returns the exit status.
  int run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " '" + std::string(SYNFEAT_CLI_PATH) + "' " + args +
                            " 2> '" + path("stderr.txt") + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string stderr_text() const { return read("stderr.txt"); }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  bool exists(const std::string& name) const { return fs::exists(path(name)); }

 private:
  fs::path dir_;
};

std::string corpus_text() {
  return std::string(kCanonicalTree) +
         "\n(S (NP (NNP Mary)) (VP (VBD read) (NP (DT the) (NN book))) (. .))\n"
         "(FRAG (NP (DT the) (NN dog)))\n";
}

// Field count of one CSV line, honouring double-quoted fields.
std::size_t csv_field_count(const std::string& line) {
  std::size_t fields = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++fields;
  }
  return fields;
}

std::span<const std::byte> bytes_of(const std::string& s) {
  return std::as_bytes(std::span<const char>(s.data(), s.size()));
}

}  // namespace

TEST_CASE("wrf json on the canonical tree") {
  Workdir w;
  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.jsonl") + "' --format json") == 0);
  const std::string body = w.read("out.jsonl");
  const json record = json::parse(body.substr(0, body.find('\n')));
  CHECK(record["rows"].size() == 9);
  CHECK(record["rows"][0].size() == 124);
  CHECK(record["words"][4] == "like");
  CHECK(record["pos"][4] == "VBP");

  const json manifest = json::parse(w.read("out.jsonl.manifest.json"));
  CHECK(manifest["columns"] == 124);
  REQUIRE(manifest["sentences"].size() == 1);
  CHECK(manifest["sentences"][0]["rows"] == 9);
  std::size_t total = 0;
  for (const auto& block : manifest["schema"]) total += block["width"].get<std::size_t>();
  CHECK(total == 124);
  CHECK(!w.exists("out.jsonl.tmp"));
}

TEST_CASE("psf and both feature sets") {
  Workdir w;
  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("psf.bin") +
                "' --format bin --features psf --levels 10") == 0);
  auto records = synfeat::decode_matrix_stream(bytes_of(w.read("psf.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].rows() == 9);
  CHECK(records[0].cols() == 329);

  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("both.bin") +
                "' --format bin --features both --levels 3") == 0);
  records = synfeat::decode_matrix_stream(bytes_of(w.read("both.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].cols() == 39 + 29 * 3 + 124);
  const json manifest = json::parse(w.read("both.bin.manifest.json"));
  std::size_t total = 0;
  for (const auto& block : manifest["schema"]) total += block["width"].get<std::size_t>();
  CHECK(total == records[0].cols());
  // WRF columns follow PSF columns.
  CHECK(manifest["schema"].back()["offset"] == 39 + 29 * 3 + 123);
}

TEST_CASE("csv output") {
  Workdir w;
  const auto in = w.write("in.txt", corpus_text());
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.csv") + "' --format csv") == 0);
  std::istringstream lines(w.read("out.csv"));
  std::string header, line;
  std::getline(lines, header);
  CHECK(header.rfind("sentence,row,word_index,word,", 0) == 0);
  CHECK(csv_field_count(header) == 4 + 124);
  CHECK(header.find(",\"pos=,\",") != std::string::npos);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(csv_field_count(line) == 4 + 124);
  }
  CHECK(rows == 9 + 5 + 2);
}

TEST_CASE("phoneme level output") {
  Workdir w;
  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.bin") +
                "' --format bin --level phoneme --lexicon '" + data_path("lexicon.txt") +
                "'") == 0);
  const auto records = synfeat::decode_matrix_stream(bytes_of(w.read("out.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].rows() == 31);

  CHECK(w.run("-i '" + in + "' -o '" + w.path("x.bin") + "' --level phoneme") == 4);
}

TEST_CASE("projection output") {
  Workdir w;
  const auto in = w.write("in.txt", corpus_text());
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.bin") +
                "' --format bin --projection-seed 3") == 0);
  const auto records = synfeat::decode_matrix_stream(bytes_of(w.read("out.bin")));
  REQUIRE(records.size() == 3);
  for (const auto& m : records) {
    CHECK(m.cols() == 256);
    for (float x : m.data()) CHECK(x >= 0.0f);
  }
  const json manifest = json::parse(w.read("out.bin.manifest.json"));
  CHECK(manifest["projection"]["dim"] == 256);
}

TEST_CASE("empty input") {
  Workdir w;
  const auto in = w.write("empty.txt", "");
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.bin") + "' --format bin") == 0);
  CHECK(w.read("out.bin").empty());
  const json manifest = json::parse(w.read("out.bin.manifest.json"));
  CHECK(manifest["sentences"].empty());
  CHECK(manifest["columns"] == 0);
}

TEST_CASE("exit codes and cleanup") {
  Workdir w;
  const auto bad_tree = w.write("bad.txt", std::string(kCanonicalTree) + "\n(S (NP dog))\n");
  CHECK(w.run("-i '" + bad_tree + "' -o '" + w.path("out.bin") + "'") == 1);
  CHECK(w.stderr_text().find(":2:") != std::string::npos);
  CHECK(!w.exists("out.bin"));
  CHECK(!w.exists("out.bin.manifest.json"));

  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  CHECK(w.run("-i '" + in + "' -o '" + w.path("out.bin") + "' --phrase-inventory '" +
              data_path("three_phrases.txt") + "'") == 2);
  CHECK(!w.exists("out.bin"));
  CHECK(w.run("-i '" + in + "' -o '" + w.path("out.bin") + "' --phrase-inventory '" +
              data_path("three_phrases.txt") + "' --unknown-labels zero") == 0);

  const auto oov = w.write("oov.txt", "(S (NN zorp))\n");
  CHECK(w.run("-i '" + oov + "' -o '" + w.path("p.bin") + "' --level phoneme --lexicon '" +
              data_path("lexicon.txt") + "'") == 2);
  CHECK(w.run("-i '" + oov + "' -o '" + w.path("p.bin") + "' --level phoneme --lexicon '" +
              data_path("lexicon.txt") + "' --oov letters") == 0);

  CHECK(w.run("-i '" + w.path("missing.txt") + "' -o '" + w.path("o.bin") + "'") == 3);
  CHECK(w.run("-i '" + in + "' -o '" + w.path("no/such/dir/o.bin") + "'") == 3);
  CHECK(w.run("-i '" + in + "' -o '" + w.path("o.bin") + "' --format xml") == 4);
  CHECK(w.run("-i '" + in + "' -o '" + w.path("o.bin") + "' --levels 0") == 4);
  CHECK(w.run("-i '" + in + "'") == 4);
}

TEST_CASE("built inventories are saved") {
  Workdir w;
  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("out.bin") +
                "' --format bin --build-inventories --save-phrase-inventory '" +
                w.path("phrase.txt") + "' --save-pos-inventory '" + w.path("pos.txt") +
                "'") == 0);
  CHECK(w.read("phrase.txt") == "S\nNP\nVP\nADVP\n");
  const auto records = synfeat::decode_matrix_stream(bytes_of(w.read("out.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].cols() == 7 + 3 * 4 + 4);
}

TEST_CASE("config file with flag precedence") {
  Workdir w;
  const auto in = w.write("in.txt", std::string(kCanonicalTree) + "\n");
  const auto cfg = w.write("run.ini", "features = psf\nlevels = 5\nformat = bin\n");
  REQUIRE(w.run("--config '" + cfg + "' -i '" + in + "' -o '" + w.path("a.bin") + "'") == 0);
  auto records = synfeat::decode_matrix_stream(bytes_of(w.read("a.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].cols() == 39 + 29 * 5);

  REQUIRE(w.run("--config '" + cfg + "' -i '" + in + "' -o '" + w.path("b.bin") +
                "' --levels 3") == 0);
  records = synfeat::decode_matrix_stream(bytes_of(w.read("b.bin")));
  REQUIRE(records.size() == 1);
  CHECK(records[0].cols() == 39 + 29 * 3);
}

TEST_CASE("worker count from the environment") {
  Workdir w;
  const auto in = w.write("in.txt", corpus_text());
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("a.bin") + "' --format bin",
                "SYNFEAT_WORKERS=1") == 0);
  REQUIRE(w.run("-i '" + in + "' -o '" + w.path("b.bin") + "' --format bin",
                "SYNFEAT_WORKERS=4") == 0);
  CHECK(w.read("a.bin") == w.read("b.bin"));
  CHECK(w.read("a.bin.manifest.json") == w.read("b.bin.manifest.json"));
}

TEST_CASE("stdin input") {
  Workdir w;
  const auto in = w.write("in.txt", corpus_text());
  REQUIRE(w.run("-i - -o '" + w.path("out.bin") + "' --format bin < '" + in + "'") == 0);
  CHECK(synfeat::decode_matrix_stream(bytes_of(w.read("out.bin"))).size() == 3);
}
