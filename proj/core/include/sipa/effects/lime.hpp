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

#ifndef SIPA_EFFECTS_LIME_HPP_
#define SIPA_EFFECTS_LIME_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/core/stage_trace.hpp"

namespace sipa {

struct LimeOptions {
  std::size_t num_samples = 500;
  // Defaults to 0.75 x the sample standard deviation of the feature column.
  std::optional<double> kernel_width;
};

// Local linear surrogate in a single feature: prediction ~ intercept +
// slope * x_j near the explained point, all other features held fixed.
struct LimeExplanation {
  std::vector<double> x;
  std::size_t feature = 0;
  double intercept = 0.0;
  double slope = 0.0;
  double kernel_width = 0.0;
  double perturbation_sd = 0.0;
  std::size_t num_samples = 0;
  std::uint64_t seed = 0;
  // The fitted sample: perturbed values of x_j, kernel weights, predictions.
  std::vector<double> perturbed;
  std::vector<double> weights;
  std::vector<double> predictions;
  StageTrace trace;
};

// Perturbs x_j with Gaussian noise (sd = sample sd of column j), weights each
// sample by exp(-d^2 / width^2) with d the distance to x_j, and fits a
// weighted least-squares line by column-pivoted QR. Throws kSingularFit when
// the weighted design has rank < 2 (e.g. all perturbed values equal).
LimeExplanation lime_explain(const PredictorHandle& predictor,
                             const Dataset& data, std::span<const double> x,
                             std::size_t feature, const LimeOptions& options,
                             std::uint64_t seed);

}  // namespace sipa

#endif  // SIPA_EFFECTS_LIME_HPP_
