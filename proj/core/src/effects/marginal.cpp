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

#include "sipa/effects/marginal.hpp"

#include <cmath>
#include <vector>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/stages.hpp"

namespace sipa {

namespace {

double resolve_step(const FeatureMeta& meta, std::optional<double> h) {
  if (meta.is_categorical()) {
    fail(ErrorCode::kUnsupportedKind,
         "marginal effects need a continuous feature; '" + meta.name +
             "' is categorical");
  }
  if (!h) return default_step(meta);
  if (!(*h > 0.0) || !std::isfinite(*h)) {
    fail(ErrorCode::kInvalidArgument, "step h must be > 0");
  }
  return *h;
}

}  // namespace

MarginalEffect marginal_effect(const PredictorHandle& predictor,
                               std::span<const FeatureMeta> schema,
                               std::span<const double> x, std::size_t feature,
                               std::optional<double> h) {
  if (feature >= schema.size()) {
    fail(ErrorCode::kInvalidArgument, "feature index out of range");
  }
  MarginalEffect out;
  out.method = "me";
  out.feature = feature;
  out.step = resolve_step(schema[feature], h);
  out.value = finite_difference(predictor, schema, x, feature, out.step).quotient;
  out.trace.record(Stage::kSampling, "single point of interest");
  out.trace.record(Stage::kIntervention, "shift feature by +h and -h",
                   {{"h", out.step}});
  out.trace.record(Stage::kPrediction, "predict with the black-box model",
                   {{"rows_predicted", std::int64_t{2}}});
  out.trace.record(Stage::kAggregation,
                   "difference quotient over the realized step");
  return out;
}

MarginalEffect average_marginal_effect(const PredictorHandle& predictor,
                                       const Dataset& data, std::size_t feature,
                                       std::optional<double> h) {
  MarginalEffect out;
  out.method = "ame";
  out.feature = feature;
  out.step = resolve_step(data.meta(feature), h);
  auto& trace = out.trace;
  trace.record(Stage::kSampling, "all observations",
               {{"n", static_cast<std::int64_t>(data.num_rows())}});
  trace.record(Stage::kIntervention, "", {{"h", out.step}});

  const Dataset up = intervene_shift(data, feature, out.step, &trace);
  const Dataset down = intervene_shift(data, feature, -out.step, &trace);
  CachedPredictor cached(predictor);
  const Vector f_up = predict_batch(cached, up, &trace);
  const Vector f_down = predict_batch(cached, down, &trace);

  std::vector<double> quotients(data.num_rows());
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    const double step = up.value(i, feature) - down.value(i, feature);
    const auto r = static_cast<Eigen::Index>(i);
    quotients[i] = (f_up(r) - f_down(r)) / step;
  }
  out.value = mean(quotients);
  trace.record(Stage::kAggregation, "mean of observation-wise difference quotients");
  return out;
}

}  // namespace sipa
