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

#ifndef SIPA_EFFECTS_ALE_HPP_
#define SIPA_EFFECTS_ALE_HPP_

#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/effects/effect_curve.hpp"

namespace sipa {

// Interval edges for first-order ALE: the minimum followed by the
// inverse-ECDF quantiles at k/K, k = 1..K. Duplicate edges are dropped and
// empty intervals merged away (see merge_empty_intervals).
std::vector<double> ale_interval_edges(const Dataset& data, std::size_t feature,
                                       std::size_t num_intervals);

// Intervals are (z_{k-1}, z_k], the first one closed on the left. An empty
// interval is merged with its left neighbour, the leftmost with its right
// one. Throws kDegenerateBinning when fewer than one interval survives, and
// kInvalidArgument when a value lies outside [z_0, z_K].
std::vector<double> merge_empty_intervals(std::vector<double> edges,
                                          const std::vector<double>& values);

// First-order accumulated local effects of a continuous feature.
//
// Each observation is moved to the right and left boundary of its interval;
// the prediction difference is averaged per interval and the averages are
// accumulated from z_0. The curve is centered by the data-weighted mean of
// the accumulated values, each observation counting with the value at its
// interval's right boundary. Points are (z_k, centered value), k = 0..K'.
EffectCurve ale_first_order(const PredictorHandle& predictor,
                            const Dataset& data, std::size_t feature,
                            std::size_t num_intervals);
EffectCurve ale_first_order(const PredictorHandle& predictor,
                            const Dataset& data, std::size_t feature,
                            std::vector<double> edges);

}  // namespace sipa

#endif  // SIPA_EFFECTS_ALE_HPP_
