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

#ifndef SYNFEAT_CONDITIONING_HPP_
#define SYNFEAT_CONDITIONING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "synfeat/feature_matrix.hpp"

namespace synfeat {

inline constexpr std::size_t kDefaultConditioningDim = 256;

// Fixed random fully-connected layer used to check the shape of the
// conditioning stream a TTS encoder would consume.
//
// Weights come from std::mt19937_64 seeded with `seed`, drawn in row-major
// order (input index outer, output index inner). Each 64-bit draw x maps to
// -0.1 + 0.2 * ((x >> 11) * 2^-53), then is rounded to float. Bias is zero.
// The mapping avoids std::uniform_real_distribution, whose output is not
// specified across standard libraries.
class Projection {
 public:
  // Throws Error(kInvalidArgument) when either dimension is zero.
  Projection(std::uint64_t seed, std::size_t in_dim,
             std::size_t out_dim = kDefaultConditioningDim);

  std::uint64_t seed() const { return seed_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  std::span<const float> weights() const { return weights_; }  // in x out
  std::span<const float> bias() const { return bias_; }

 private:
  std::uint64_t seed_;
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<float> weights_;
  std::vector<float> bias_;
};

inline Projection init_projection(std::uint64_t seed, std::size_t in_dim,
                                  std::size_t out_dim = kDefaultConditioningDim) {
  return Projection(seed, in_dim, out_dim);
}

// max(0, x W + b) per row. Throws Error(kDimension) when the matrix width
// differs from the projection's input size.
FeatureMatrix project_relu(const FeatureMatrix& features,
                           const Projection& projection);

}  // namespace synfeat

#endif  // SYNFEAT_CONDITIONING_HPP_
