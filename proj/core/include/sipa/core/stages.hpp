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

#ifndef SIPA_CORE_STAGES_HPP_
#define SIPA_CORE_STAGES_HPP_

#include <cstdint>
#include <span>

#include "sipa/core/dataset.hpp"
#include "sipa/core/loss.hpp"
#include "sipa/core/matrix.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/core/stage_trace.hpp"

namespace sipa {

// Stage primitives. Every feature-effect and importance method is a
// composition of these; each one reports itself to the optional trace.

// Sampling: m rows uniformly without replacement (partial Fisher-Yates),
// in draw order. Throws kInvalidArgument unless 1 <= m <= n.
Dataset sample_observations(const Dataset& data, std::size_t m,
                            std::uint64_t seed, StageTrace* trace = nullptr);

// Intervention: columns in `features` set to the constant `values`.
Dataset intervene_replace(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::span<const double> values,
                          StageTrace* trace = nullptr);
Dataset intervene_replace(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::span<const FeatureValue> values,
                          StageTrace* trace = nullptr);

// Intervention: rows of the listed columns permuted jointly by one uniform
// random permutation; all other columns and the target are untouched.
Dataset intervene_permute(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::uint64_t seed, StageTrace* trace = nullptr);
Dataset intervene_permute(const Dataset& data, std::size_t feature,
                          std::uint64_t seed, StageTrace* trace = nullptr);

// Intervention: column j set row by row to `values` (one per observation),
// e.g. to interval boundaries that were never observed.
Dataset intervene_assign(const Dataset& data, std::size_t feature,
                         std::span<const double> values,
                         StageTrace* trace = nullptr);

// Intervention: continuous column shifted by delta. The result may leave the
// observed range; that extrapolation is what finite differences need.
Dataset intervene_shift(const Dataset& data, std::size_t feature, double delta,
                        StageTrace* trace = nullptr);

// Prediction: pass-through to the black box (kShape on column mismatch).
Vector predict_batch(const PredictorHandle& predictor, const Dataset& data,
                     StageTrace* trace = nullptr);
Vector predict_batch(CachedPredictor& predictor, const Dataset& data,
                     StageTrace* trace = nullptr);

struct FiniteDifference {
  double fd = 0.0;        // f(x_j + h, x_-j) - f(x_j - h, x_-j)
  double quotient = 0.0;  // fd over the realized step (x_j + h) - (x_j - h)
};

// Symmetric finite difference of the prediction at x with respect to
// feature j. The quotient divides by the step actually realized in floating
// point, which equals 2h in exact arithmetic.
FiniteDifference finite_difference(const PredictorHandle& predictor,
                                   std::span<const FeatureMeta> schema,
                                   std::span<const double> x, std::size_t j,
                                   double h);

// 1e-4 times the observed range of a continuous feature (1e-4 * max(|min|, 1)
// for a zero-width range).
double default_step(const FeatureMeta& meta);

// Mean loss over the rows of `data` (kMissingTarget without a target).
double estimate_generalization_error(const PredictorHandle& predictor,
                                     const Dataset& data,
                                     const LossFunction& loss,
                                     StageTrace* trace = nullptr);
double estimate_generalization_error(CachedPredictor& predictor,
                                     const Dataset& data,
                                     const LossFunction& loss,
                                     StageTrace* trace = nullptr);

// Pointwise losses of `predictions` against the target of `data`.
Vector pointwise_loss(const Vector& predictions, const Dataset& data,
                      const LossFunction& loss);

}  // namespace sipa

#endif  // SIPA_CORE_STAGES_HPP_
