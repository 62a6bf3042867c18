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

#ifndef SIPA_CORE_REDUCE_HPP_
#define SIPA_CORE_REDUCE_HPP_

#include <span>

namespace sipa {

// All aggregation-stage sums go through these so the floating-point
// summation order is a fixed pairwise tree over the input order, no matter
// how the predictions were produced.
double pairwise_sum(std::span<const double> values) noexcept;

// Throws kInvalidArgument on empty input.
double mean(std::span<const double> values);

// Sample standard deviation, n - 1 denominator, computed on values shifted
// by the first element so that a constant sequence gives exactly 0.
// Throws kUndefinedVariance for fewer than two values.
double sample_sd(std::span<const double> values);

}  // namespace sipa

#endif  // SIPA_CORE_REDUCE_HPP_
