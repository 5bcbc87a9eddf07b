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

#include "synfeat/matrix_io.hpp"

#include <bit>
#include <cstring>
#include <limits>

#include "synfeat/error.hpp"

namespace synfeat {

namespace {

template <typename T>
void put_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

template <typename T>
T get_le(std::span<const std::byte> bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(std::to_integer<std::uint8_t>(bytes[offset + i]))
             << (8 * i);
  }
  return value;
}

}  // namespace

std::size_t encoded_size(const FeatureMatrix& matrix) {
  return kMatrixHeaderSize + 4 * matrix.rows() * matrix.cols();
}

void encode_matrix(const FeatureMatrix& matrix, std::string& out) {
  out.reserve(out.size() + encoded_size(matrix));
  out.append(kMatrixMagic, sizeof(kMatrixMagic));
  put_le<std::uint16_t>(out, kMatrixFormatVersion);
  put_le<std::uint64_t>(out, matrix.rows());
  put_le<std::uint64_t>(out, matrix.cols());
  for (float v : matrix.data()) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
}

std::string encode_matrix(const FeatureMatrix& matrix) {
  std::string out;
  encode_matrix(matrix, out);
  return out;
}

FeatureMatrix decode_matrix(std::span<const std::byte> bytes,
                            std::size_t& consumed) {
  if (bytes.size() < kMatrixHeaderSize) {
    throw Error(ErrorCode::kParse, "truncated matrix header", 0);
  }
  if (std::memcmp(bytes.data(), kMatrixMagic, sizeof(kMatrixMagic)) != 0) {
    throw Error(ErrorCode::kParse, "bad matrix magic, expected SYNF", 0);
  }
  const auto version = get_le<std::uint16_t>(bytes, 4);
  if (version != kMatrixFormatVersion) {
    throw Error(ErrorCode::kParse,
                "unsupported matrix format version " + std::to_string(version),
                4);
  }
  const auto rows = get_le<std::uint64_t>(bytes, 6);
  const auto cols = get_le<std::uint64_t>(bytes, 14);
  const std::uint64_t available = (bytes.size() - kMatrixHeaderSize) / 4;
  if (cols != 0 && rows > available / cols) {
    throw Error(ErrorCode::kParse,
                "matrix payload truncated: " + std::to_string(rows) + " x " +
                    std::to_string(cols) + " values declared",
                kMatrixHeaderSize);
  }
  std::vector<float> data(rows * cols);
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = std::bit_cast<float>(
        get_le<std::uint32_t>(bytes, kMatrixHeaderSize + 4 * i));
  }
  consumed = kMatrixHeaderSize + 4 * data.size();
  Schema schema;
  append_block(schema, "data", cols);
  return FeatureMatrix(rows, std::move(schema), std::move(data));
}

std::vector<FeatureMatrix> decode_matrix_stream(
    std::span<const std::byte> bytes) {
  std::vector<FeatureMatrix> out;
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    std::size_t consumed = 0;
    try {
      out.push_back(decode_matrix(bytes.subspan(offset), consumed));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "record " + std::to_string(out.size()) + ": " + e.what(),
                  offset + e.offset().value_or(0));
    }
    offset += consumed;
  }
  return out;
}

}  // namespace synfeat
