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

#include "synfeat/conditioning.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "synfeat/error.hpp"

namespace synfeat {

Projection::Projection(std::uint64_t seed, std::size_t in_dim,
                       std::size_t out_dim)
    : seed_(seed), in_dim_(in_dim), out_dim_(out_dim) {
  if (in_dim == 0 || out_dim == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection dimensions must be positive, got " +
                    std::to_string(in_dim) + " x " + std::to_string(out_dim));
  }
  std::mt19937_64 engine(seed);
  weights_.resize(in_dim * out_dim);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (float& w : weights_) {
    const double unit = static_cast<double>(engine() >> 11) * kScale;
    w = static_cast<float>(-0.1 + 0.2 * unit);
  }
  bias_.assign(out_dim, 0.0f);
}

FeatureMatrix project_relu(const FeatureMatrix& features,
                           const Projection& projection) {
  if (features.cols() != projection.in_dim()) {
    throw Error(ErrorCode::kDimension,
                "projection expects " + std::to_string(projection.in_dim()) +
                    " input columns, matrix has " +
                    std::to_string(features.cols()));
  }
  Schema schema;
  append_block(schema, "conditioning", projection.out_dim());
  FeatureMatrix out(features.rows(), std::move(schema));

  const std::size_t out_dim = projection.out_dim();
  const auto weights = projection.weights();
  std::vector<double> acc(out_dim);
  for (std::size_t r = 0; r < features.rows(); ++r) {
    const auto bias = projection.bias();
    std::copy(bias.begin(), bias.end(), acc.begin());
    const auto x = features.row(r);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0f) continue;  // one-hot rows are mostly zero
      const auto w = weights.subspan(i * out_dim, out_dim);
      const double xi = x[i];
      for (std::size_t j = 0; j < out_dim; ++j) acc[j] += xi * w[j];
    }
    auto y = out.row(r);
    for (std::size_t j = 0; j < out_dim; ++j) {
      y[j] = static_cast<float>(std::max(0.0, acc[j]));
    }
  }
  return out;
}

}  // namespace synfeat
