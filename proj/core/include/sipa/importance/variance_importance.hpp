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

#ifndef SIPA_IMPORTANCE_VARIANCE_IMPORTANCE_HPP_
#define SIPA_IMPORTANCE_VARIANCE_IMPORTANCE_HPP_

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/effects/effect_curve.hpp"
#include "sipa/importance/importance_score.hpp"

namespace sipa {

// Flatness of the PD as importance.
//   continuous:  sample sd (n - 1) of PD_j(x_j^(i)) over all n observations
//   categorical: (max - min) / 4 of the PD over all levels
// Throws kUndefinedVariance for a continuous feature with n = 1.
ImportanceScore pd_importance(const PredictorHandle& predictor,
                              const Dataset& data, std::size_t feature);

// Conditional expected score: the PD on the observed-values grid, tagged
// "ces".
EffectCurve ces_curve(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t feature);

// Sample sd of the CES over all n observed values. For continuous features
// it is checked against pd_importance and a mismatch is a logic error.
ImportanceScore firm(const PredictorHandle& predictor, const Dataset& data,
                     std::size_t feature);

}  // namespace sipa

#endif  // SIPA_IMPORTANCE_VARIANCE_IMPORTANCE_HPP_
