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

#ifndef SIPA_SIPA_HPP_
#define SIPA_SIPA_HPP_

#include "sipa/core/dataset.hpp"
#include "sipa/core/error.hpp"
#include "sipa/core/format.hpp"
#include "sipa/core/loss.hpp"
#include "sipa/core/matrix.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"
#include "sipa/core/stage_trace.hpp"
#include "sipa/core/stages.hpp"
#include "sipa/effects/ale.hpp"
#include "sipa/effects/coalition.hpp"
#include "sipa/effects/effect_curve.hpp"
#include "sipa/effects/grid.hpp"
#include "sipa/effects/lime.hpp"
#include "sipa/effects/marginal.hpp"
#include "sipa/effects/partial_dependence.hpp"
#include "sipa/effects/shapley.hpp"
#include "sipa/importance/importance_score.hpp"
#include "sipa/importance/permutation_importance.hpp"
#include "sipa/importance/sfimp.hpp"
#include "sipa/importance/variance_importance.hpp"
#include "sipa/refmodels/reference_model.hpp"

#endif  // SIPA_SIPA_HPP_
