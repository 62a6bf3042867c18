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

#include "sipa/importance/variance_importance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/effects/grid.hpp"
#include "sipa/effects/partial_dependence.hpp"

namespace sipa {

std::string_view to_string(ImportanceMethod method) noexcept {
  switch (method) {
    case ImportanceMethod::kPdSd:
      return "pd_sd";
    case ImportanceMethod::kFirm:
      return "firm";
    case ImportanceMethod::kPfiPermutation:
      return "pfi_permutation";
    case ImportanceMethod::kPfiExhaustive:
      return "pfi_exhaustive";
    case ImportanceMethod::kSfimp:
      return "sfimp";
  }
  return "unknown";
}

namespace {

// Curve value at each observation's own x_j, in row order. The curve was
// evaluated on the observed grid, so every lookup is an exact match.
std::vector<double> values_at_observations(const EffectCurve& curve,
                                           const Dataset& data,
                                           std::size_t feature) {
  std::vector<double> grid;
  grid.reserve(curve.points.size());
  for (const auto& p : curve.points) grid.push_back(p.x.front());
  std::vector<double> out;
  out.reserve(data.num_rows());
  for (std::size_t i = 0; i < data.num_rows(); ++i) {
    const double v = data.value(i, feature);
    const auto it = std::find(grid.begin(), grid.end(), v);
    out.push_back(curve.points[static_cast<std::size_t>(it - grid.begin())].y);
  }
  return out;
}

void check_sd_defined(const Dataset& data) {
  if (data.num_rows() < 2) {
    fail(ErrorCode::kUndefinedVariance,
         "standard deviation of the PD needs n >= 2 observations");
  }
}

}  // namespace

ImportanceScore pd_importance(const PredictorHandle& predictor,
                              const Dataset& data, std::size_t feature) {
  const auto& meta = data.meta(feature);
  if (!meta.is_categorical()) check_sd_defined(data);
  const EffectCurve pd = pd_curve(predictor, data, Grid::observed(data, feature));

  ImportanceScore score;
  score.method = ImportanceMethod::kPdSd;
  score.feature = feature;
  score.trace = pd.trace;
  if (meta.is_categorical()) {
    const auto v = pd.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    score.value = (*hi - *lo) / 4.0;
    score.trace.record(Stage::kAggregation, "range of the PD over levels / 4");
  } else {
    score.value = sample_sd(values_at_observations(pd, data, feature));
    score.trace.record(Stage::kAggregation,
                       "sample sd of the PD over observed values");
  }
  return score;
}

EffectCurve ces_curve(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t feature) {
  EffectCurve curve = pd_curve(predictor, data, Grid::observed(data, feature));
  curve.method = "ces";
  return curve;
}

ImportanceScore firm(const PredictorHandle& predictor, const Dataset& data,
                     std::size_t feature) {
  const auto& meta = data.meta(feature);
  check_sd_defined(data);
  const EffectCurve ces = ces_curve(predictor, data, feature);

  ImportanceScore score;
  score.method = ImportanceMethod::kFirm;
  score.feature = feature;
  score.trace = ces.trace;
  score.value = sample_sd(values_at_observations(ces, data, feature));
  score.trace.record(Stage::kAggregation,
                     "sample sd of the CES over observed values");
  if (!meta.is_categorical()) {
    const double reference = pd_importance(predictor, data, feature).value;
    if (score.value != reference) {
      throw std::logic_error("FIRM and PD standard deviation diverged for '" +
                             meta.name + "'");
    }
  }
  return score;
}

}  // namespace sipa
