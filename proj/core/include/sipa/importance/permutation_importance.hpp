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

#ifndef SIPA_IMPORTANCE_PERMUTATION_IMPORTANCE_HPP_
#define SIPA_IMPORTANCE_PERMUTATION_IMPORTANCE_HPP_

#include <cstdint>

#include "sipa/core/dataset.hpp"
#include "sipa/core/loss.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/effects/effect_curve.hpp"
#include "sipa/importance/importance_score.hpp"

namespace sipa {

// Mean over `repeats` independent permutations of column j of
// GE(permuted) - GE(original). Per-repeat seeds are drawn from one
// generator seeded with `seed` and reported with the per-repeat values.
ImportanceScore pfi_permutation(const PredictorHandle& predictor,
                                const Dataset& data, std::size_t feature,
                                const LossFunction& loss, std::size_t repeats,
                                std::uint64_t seed);

// Individual conditional importance of observation i: for every observation
// l, the loss change
//   L(f(x_j^(l), x_-j^(i)), y^(i)) - L(f(x^(i)), y^(i)).
// One point per l (n points, ordered by x_j^(l), ties by l), so repeated
// observed values appear repeatedly.
EffectCurve ici_curve(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t observation, std::size_t feature,
                      const LossFunction& loss);

// Pointwise mean of all n ICI curves (same n points as ici_curve).
EffectCurve pi_curve(const PredictorHandle& predictor, const Dataset& data,
                     std::size_t feature, const LossFunction& loss);

// Mean of the PI curve values: the double average of the loss change over
// all (i, l) pairs. Deterministic, no seed.
ImportanceScore pfi_exhaustive(const PredictorHandle& predictor,
                               const Dataset& data, std::size_t feature,
                               const LossFunction& loss);

}  // namespace sipa

#endif  // SIPA_IMPORTANCE_PERMUTATION_IMPORTANCE_HPP_
