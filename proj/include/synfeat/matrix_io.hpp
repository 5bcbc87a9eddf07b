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

#ifndef SYNFEAT_MATRIX_IO_HPP_
#define SYNFEAT_MATRIX_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "synfeat/feature_matrix.hpp"

namespace synfeat {

// Binary matrix record, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "SYNF"
//   4       2     format version (u16) = 1
//   6       8     row count (u64)
//   14      8     column count (u64)
//   22      4*n   row-major IEEE-754 binary32 values
//
// A file holds one record per sentence, back to back. The schema is not
// stored; it lives in the run manifest.
inline constexpr char kMatrixMagic[4] = {'S', 'Y', 'N', 'F'};
inline constexpr std::uint16_t kMatrixFormatVersion = 1;
inline constexpr std::size_t kMatrixHeaderSize = 22;

std::size_t encoded_size(const FeatureMatrix& matrix);
void encode_matrix(const FeatureMatrix& matrix, std::string& out);
std::string encode_matrix(const FeatureMatrix& matrix);

// Reads one record from the front of `bytes`, setting `consumed`. The result
// has a single schema block named "data".
FeatureMatrix decode_matrix(std::span<const std::byte> bytes,
                            std::size_t& consumed);
std::vector<FeatureMatrix> decode_matrix_stream(std::span<const std::byte> bytes);

}  // namespace synfeat

#endif  // SYNFEAT_MATRIX_IO_HPP_
