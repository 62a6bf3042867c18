/*
 * Copyright 2026 The SIPA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sipa/core/reduce.hpp"

#include <cmath>
#include <vector>

#include "sipa/core/error.hpp"

namespace sipa {

double pairwise_sum(std::span<const double> values) noexcept {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double mean(std::span<const double> values) {
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "mean of no values");
  return pairwise_sum(values) / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  if (values.size() < 2) {
    fail(ErrorCode::kUndefinedVariance,
         "standard deviation needs at least two values");
  }
  const double shift = values.front();
  std::vector<double> d(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) d[i] = values[i] - shift;
  const double m = mean(d);
  for (double& v : d) v = (v - m) * (v - m);
  return std::sqrt(pairwise_sum(d) / static_cast<double>(values.size() - 1));
}

}  // namespace sipa
