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

#ifndef SYNFEAT_FEATURE_MATRIX_HPP_
#define SYNFEAT_FEATURE_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synfeat {

// A named run of adjacent columns. `column_labels` is either empty or holds
// one name per column (the inventory labels of a one-hot block).
struct ColumnBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t width = 0;
  std::vector<std::string> column_labels;

  friend bool operator==(const ColumnBlock&, const ColumnBlock&) = default;
};

using Schema = std::vector<ColumnBlock>;

// Appends a block at the current end of `schema`.
void append_block(Schema& schema, std::string name, std::size_t width,
                  std::vector<std::string> column_labels = {});
std::size_t schema_width(const Schema& schema);

// Dense row-major float matrix with a column schema that tiles [0, cols).
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  // Zero-filled.
  FeatureMatrix(std::size_t rows, Schema schema);
  // Throws Error(kDimension) unless data.size() == rows * schema width.
  FeatureMatrix(std::size_t rows, Schema schema, std::vector<float> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Schema& schema() const { return schema_; }

  std::span<const float> data() const { return data_; }
  std::span<float> data() { return data_; }
  std::span<const float> row(std::size_t r) const {
    return std::span<const float>(data_).subspan(r * cols_, cols_);
  }
  std::span<float> row(std::size_t r) {
    return std::span<float>(data_).subspan(r * cols_, cols_);
  }
  float at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Throws Error(kRange) when no block has that name.
  const ColumnBlock& block(std::string_view name) const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Schema schema_;
  std::vector<float> data_;
};

// Column-wise concatenation; block names get the given prefixes.
FeatureMatrix hconcat(const FeatureMatrix& left, std::string_view left_prefix,
                      const FeatureMatrix& right,
                      std::string_view right_prefix);

}  // namespace synfeat

#endif  // SYNFEAT_FEATURE_MATRIX_HPP_
