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

#include "synfeat/feature_matrix.hpp"

#include <algorithm>

#include "synfeat/error.hpp"

namespace synfeat {

namespace {

void check_schema(const Schema& schema) {
  std::size_t expected = 0;
  for (const ColumnBlock& block : schema) {
    if (block.offset != expected) {
      throw Error(ErrorCode::kDimension,
                  "schema block '" + block.name + "' starts at " +
                      std::to_string(block.offset) + ", expected " +
                      std::to_string(expected));
    }
    if (!block.column_labels.empty() &&
        block.column_labels.size() != block.width) {
      throw Error(ErrorCode::kDimension,
                  "schema block '" + block.name + "' has " +
                      std::to_string(block.column_labels.size()) +
                      " column labels for width " +
                      std::to_string(block.width));
    }
    expected += block.width;
  }
}

}  // namespace

void append_block(Schema& schema, std::string name, std::size_t width,
                  std::vector<std::string> column_labels) {
  const std::size_t offset = schema_width(schema);
  schema.push_back({std::move(name), offset, width, std::move(column_labels)});
}

std::size_t schema_width(const Schema& schema) {
  return schema.empty() ? 0 : schema.back().offset + schema.back().width;
}

FeatureMatrix::FeatureMatrix(std::size_t rows, Schema schema)
    : rows_(rows), cols_(schema_width(schema)), schema_(std::move(schema)) {
  check_schema(schema_);
  data_.assign(rows_ * cols_, 0.0f);
}

FeatureMatrix::FeatureMatrix(std::size_t rows, Schema schema,
                             std::vector<float> data)
    : rows_(rows),
      cols_(schema_width(schema)),
      schema_(std::move(schema)),
      data_(std::move(data)) {
  check_schema(schema_);
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimension,
                "matrix data has " + std::to_string(data_.size()) +
                    " values, expected " + std::to_string(rows_) + " x " +
                    std::to_string(cols_));
  }
}

const ColumnBlock& FeatureMatrix::block(std::string_view name) const {
  auto it = std::find_if(schema_.begin(), schema_.end(),
                         [&](const ColumnBlock& b) { return b.name == name; });
  if (it == schema_.end()) {
    throw Error(ErrorCode::kRange,
                "no column block named '" + std::string(name) + "'");
  }
  return *it;
}

FeatureMatrix hconcat(const FeatureMatrix& left, std::string_view left_prefix,
                      const FeatureMatrix& right,
                      std::string_view right_prefix) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorCode::kDimension,
                "cannot concatenate matrices with " +
                    std::to_string(left.rows()) + " and " +
                    std::to_string(right.rows()) + " rows");
  }
  Schema schema;
  for (const ColumnBlock& b : left.schema()) {
    append_block(schema, std::string(left_prefix) + b.name, b.width,
                 b.column_labels);
  }
  for (const ColumnBlock& b : right.schema()) {
    append_block(schema, std::string(right_prefix) + b.name, b.width,
                 b.column_labels);
  }
  FeatureMatrix out(left.rows(), std::move(schema));
  for (std::size_t r = 0; r < left.rows(); ++r) {
    auto dst = out.row(r);
    std::copy(left.row(r).begin(), left.row(r).end(), dst.begin());
    std::copy(right.row(r).begin(), right.row(r).end(),
              dst.begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return out;
}

}  // namespace synfeat
