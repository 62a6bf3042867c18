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

#ifndef SIPA_EFFECTS_EFFECT_CURVE_HPP_
#define SIPA_EFFECTS_EFFECT_CURVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sipa/core/stage_trace.hpp"

namespace sipa {

struct CurvePoint {
  std::vector<double> x;  // one entry per curve feature
  double y = 0.0;
};

// Ordered (grid value, effect value) pairs. Used for ICE, PD, ALE, CES and
// the loss-based ICI/PI curves.
struct EffectCurve {
  std::string method;
  std::vector<std::size_t> features;
  std::optional<std::size_t> observation;  // local curves only
  std::vector<CurvePoint> points;
  StageTrace trace;

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.y);
    return out;
  }
};

}  // namespace sipa

#endif  // SIPA_EFFECTS_EFFECT_CURVE_HPP_
