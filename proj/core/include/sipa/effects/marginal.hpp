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

#ifndef SIPA_EFFECTS_MARGINAL_HPP_
#define SIPA_EFFECTS_MARGINAL_HPP_

#include <optional>
#include <span>
#include <string>

#include "sipa/core/dataset.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/core/stage_trace.hpp"

namespace sipa {

struct MarginalEffect {
  std::string method;  // "me" or "ame"
  std::size_t feature = 0;
  double value = 0.0;
  double step = 0.0;
  StageTrace trace;
};

// Symmetric difference quotient at x. `h` defaults to default_step() of the
// feature's metadata.
MarginalEffect marginal_effect(const PredictorHandle& predictor,
                               std::span<const FeatureMeta> schema,
                               std::span<const double> x, std::size_t feature,
                               std::optional<double> h = std::nullopt);

// Mean of the marginal effects at every observed row.
MarginalEffect average_marginal_effect(const PredictorHandle& predictor,
                                       const Dataset& data, std::size_t feature,
                                       std::optional<double> h = std::nullopt);

}  // namespace sipa

#endif  // SIPA_EFFECTS_MARGINAL_HPP_
