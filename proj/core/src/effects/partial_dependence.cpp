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

#include "sipa/effects/partial_dependence.hpp"

#include <string>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/stages.hpp"

namespace sipa {

namespace {

std::span<const double> as_span(const Vector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void check_grid(const Dataset& data, const Grid& grid) {
  for (std::size_t f : grid.features()) data.check_feature(f);
  if (grid.size() == 0) fail(ErrorCode::kInvalidArgument, "grid has no points");
}

// Row k holds the predictions for grid point k across all n observations.
Matrix ice_matrix(CachedPredictor& predictor, const Dataset& data,
                  const Grid& grid, StageTrace& trace) {
  Matrix out(static_cast<Eigen::Index>(grid.size()),
             static_cast<Eigen::Index>(data.num_rows()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto point = grid.point(k);
    const Dataset intervened =
        intervene_replace(data, grid.features(), point, &trace);
    out.row(static_cast<Eigen::Index>(k)) =
        predict_batch(predictor, intervened, &trace).transpose();
  }
  return out;
}

void record_background(StageTrace& trace, const Dataset& data) {
  trace.record(Stage::kSampling, "all observations as background",
               {{"n", static_cast<std::int64_t>(data.num_rows())}});
}

std::vector<std::size_t> to_vector(std::span<const std::size_t> s) {
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<EffectCurve> ice_curves(const PredictorHandle& predictor,
                                    const Dataset& data, const Grid& grid) {
  check_grid(data, grid);
  CachedPredictor cached(predictor);
  StageTrace trace;
  record_background(trace, data);
  trace.record(Stage::kIntervention, "",
               {{"grid_points", static_cast<std::int64_t>(grid.size())}});
  const Matrix values = ice_matrix(cached, data, grid, trace);
  trace.record(Stage::kAggregation, "none (one curve per observation)");

  std::vector<EffectCurve> curves(data.num_rows());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    auto& c = curves[i];
    c.method = "ice";
    c.features = to_vector(grid.features());
    c.observation = i;
    c.trace = trace;
    c.points.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      c.points.push_back({grid.point(k), values(static_cast<Eigen::Index>(k),
                                                static_cast<Eigen::Index>(i))});
    }
  }
  return curves;
}

EffectCurve pd_curve(const PredictorHandle& predictor, const Dataset& data,
                     const Grid& grid) {
  check_grid(data, grid);
  CachedPredictor cached(predictor);
  EffectCurve curve;
  curve.method = "pd";
  curve.features = to_vector(grid.features());
  auto& trace = curve.trace;

  if (grid.dimension() == data.num_features()) {
    // Nothing left to marginalize.
    Matrix rows(static_cast<Eigen::Index>(grid.size()),
                static_cast<Eigen::Index>(data.num_features()));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto point = grid.point(k);
      for (std::size_t a = 0; a < point.size(); ++a) {
        rows(static_cast<Eigen::Index>(k),
             static_cast<Eigen::Index>(grid.features()[a])) = point[a];
      }
    }
    trace.record(Stage::kSampling, "no background (all features fixed)");
    trace.record(Stage::kIntervention, "set every feature to the grid point",
                 {{"grid_points", static_cast<std::int64_t>(grid.size())}});
    trace.record(Stage::kPrediction, "predict with the black-box model");
    const Vector f = cached.predict(rows, &trace);
    trace.record(Stage::kAggregation, "none (prediction at grid points)");
    for (std::size_t k = 0; k < grid.size(); ++k) {
      curve.points.push_back({grid.point(k), f(static_cast<Eigen::Index>(k))});
    }
    return curve;
  }

  record_background(trace, data);
  trace.record(Stage::kIntervention, "",
               {{"grid_points", static_cast<std::int64_t>(grid.size())}});
  const Matrix values = ice_matrix(cached, data, grid, trace);
  trace.record(Stage::kAggregation, "mean over observations");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vector row = values.row(static_cast<Eigen::Index>(k)).transpose();
    curve.points.push_back({grid.point(k), mean(as_span(row))});
  }
  return curve;
}

double partial_dependence_at(CachedPredictor& predictor, const Dataset& data,
                             std::span<const std::size_t> features,
                             std::span<const double> values,
                             StageTrace* trace) {
  const Dataset intervened = intervene_replace(data, features, values, trace);
  const Vector f = predict_batch(predictor, intervened, trace);
  return mean(as_span(f));
}

}  // namespace sipa
