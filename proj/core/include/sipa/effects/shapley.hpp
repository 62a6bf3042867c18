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

#ifndef SIPA_EFFECTS_SHAPLEY_HPP_
#define SIPA_EFFECTS_SHAPLEY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/core/stage_trace.hpp"

namespace sipa {

enum class ShapleyMode { kExact, kMonteCarlo };

struct ShapleyOptions {
  // Exact enumeration visits 2^(p-1) coalitions per feature.
  std::size_t max_features = 12;
};

// Shapley values of one explained point under the mean-shifted PD payout
// v(K) = PD_K(x_K) - mean prediction.
struct ShapleyExplanation {
  std::vector<double> x;
  std::vector<std::size_t> features;  // explained features
  std::vector<double> values;         // one per entry of `features`
  std::vector<double> standard_errors;  // Monte Carlo only
  double full_payout = 0.0;             // v(P)
  ShapleyMode mode = ShapleyMode::kExact;
  std::size_t iterations = 0;  // Monte Carlo only
  std::optional<std::uint64_t> seed;
  StageTrace trace;

  // Value of `feature`; throws kInvalidArgument if it was not explained.
  double value(std::size_t feature) const;
};

// v_PD(x_K). Exactly 0 for the empty coalition.
double pd_payout(const PredictorHandle& predictor, const Dataset& data,
                 std::span<const double> x,
                 std::span<const std::size_t> coalition);

// Exact values for every feature (or only `feature`). All payouts are
// computed once per run and shared between features. Throws kCapacity when
// p > options.max_features.
ShapleyExplanation shapley_exact(const PredictorHandle& predictor,
                                 const Dataset& data, std::span<const double> x,
                                 std::optional<std::size_t> feature = std::nullopt,
                                 const ShapleyOptions& options = {});

// Permutation-sampling estimate for `feature`. Each iteration draws a
// uniform feature ordering and a uniform background row z; the contribution
// is f(x_+) - f(x_-), where x_+ takes x on the features up to and including
// `feature` in the ordering and z elsewhere, and x_- the same without
// `feature`. Reports the mean and its standard error.
ShapleyExplanation shapley_mc(const PredictorHandle& predictor,
                              const Dataset& data, std::span<const double> x,
                              std::size_t feature, std::size_t iterations,
                              std::uint64_t seed);

}  // namespace sipa

#endif  // SIPA_EFFECTS_SHAPLEY_HPP_
