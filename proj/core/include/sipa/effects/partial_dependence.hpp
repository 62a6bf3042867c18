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

#ifndef SIPA_EFFECTS_PARTIAL_DEPENDENCE_HPP_
#define SIPA_EFFECTS_PARTIAL_DEPENDENCE_HPP_

#include <span>
#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/effects/effect_curve.hpp"
#include "sipa/effects/grid.hpp"

namespace sipa {

// One ICE curve per observation i: f(g, x_-S^(i)) at every grid point g.
std::vector<EffectCurve> ice_curves(const PredictorHandle& predictor,
                                    const Dataset& data, const Grid& grid);

// PD: pointwise mean of the ICE curves over all n background rows. When the
// grid covers every feature there is nothing to marginalize and the curve is
// f evaluated at the grid points.
EffectCurve pd_curve(const PredictorHandle& predictor, const Dataset& data,
                     const Grid& grid);

// Single PD value at x_S, the building block of the Shapley payout. An empty
// S marginalizes everything: the mean prediction over `data`.
double partial_dependence_at(CachedPredictor& predictor, const Dataset& data,
                             std::span<const std::size_t> features,
                             std::span<const double> values,
                             StageTrace* trace = nullptr);

}  // namespace sipa

#endif  // SIPA_EFFECTS_PARTIAL_DEPENDENCE_HPP_
