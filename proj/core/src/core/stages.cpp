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

#include "sipa/core/stages.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"

namespace sipa {

Dataset sample_observations(const Dataset& data, std::size_t m,
                            std::uint64_t seed, StageTrace* trace) {
  const std::size_t n = data.num_rows();
  if (m == 0) fail(ErrorCode::kInvalidArgument, "m must be >= 1");
  if (m > n) {
    fail(ErrorCode::kInvalidArgument, "m exceeds n (m = " + std::to_string(m) +
                                          ", n = " + std::to_string(n) + ")");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t k = 0; k < m; ++k) {
    const auto pick = k + static_cast<std::size_t>(rng.uniform_index(n - k));
    std::swap(order[k], order[pick]);
  }
  order.resize(m);
  if (trace) {
    trace->record(Stage::kSampling, "uniform sample without replacement",
                  {{"m", static_cast<std::int64_t>(m)},
                   {"n", static_cast<std::int64_t>(n)},
                   {"seed", seed}});
  }
  return data.select_rows(order);
}

namespace {

void check_distinct(const Dataset& data, std::span<const std::size_t> features) {
  for (std::size_t a = 0; a < features.size(); ++a) {
    data.check_feature(features[a]);
    for (std::size_t b = a + 1; b < features.size(); ++b) {
      if (features[a] == features[b]) {
        fail(ErrorCode::kInvalidArgument,
             "feature index " + std::to_string(features[a]) + " repeated");
      }
    }
  }
}

}  // namespace

Dataset intervene_replace(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::span<const double> values, StageTrace* trace) {
  if (features.size() != values.size()) {
    fail(ErrorCode::kInvalidArgument,
         std::to_string(values.size()) + " values for " +
             std::to_string(features.size()) + " features");
  }
  check_distinct(data, features);
  for (std::size_t k = 0; k < features.size(); ++k) {
    data.encode(features[k], FeatureValue(values[k]));
  }
  if (trace) {
    trace->record(Stage::kIntervention,
                  "replace feature values with fixed values");
    trace->tally(Stage::kIntervention, "replacements", 1);
  }
  if (features.empty()) return data;
  Matrix m = data.features();
  for (std::size_t k = 0; k < features.size(); ++k) {
    m.col(static_cast<Eigen::Index>(features[k])).setConstant(values[k]);
  }
  return data.with_features(std::move(m));
}

Dataset intervene_replace(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::span<const FeatureValue> values,
                          StageTrace* trace) {
  if (features.size() != values.size()) {
    fail(ErrorCode::kInvalidArgument,
         std::to_string(values.size()) + " values for " +
             std::to_string(features.size()) + " features");
  }
  std::vector<double> encoded(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    data.check_feature(features[k]);
    encoded[k] = data.encode(features[k], values[k]);
  }
  return intervene_replace(data, features, encoded, trace);
}

Dataset intervene_permute(const Dataset& data,
                          std::span<const std::size_t> features,
                          std::uint64_t seed, StageTrace* trace) {
  check_distinct(data, features);
  const std::size_t n = data.num_rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(perm);
  if (trace) {
    trace->record(Stage::kIntervention, "permute feature rows",
                  {{"seed", seed}});
    trace->tally(Stage::kIntervention, "permutations", 1);
  }
  Matrix m = data.features();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : features) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          data.value(perm[i], j);
    }
  }
  return data.with_features(std::move(m));
}

Dataset intervene_permute(const Dataset& data, std::size_t feature,
                          std::uint64_t seed, StageTrace* trace) {
  const std::size_t features[] = {feature};
  return intervene_permute(data, features, seed, trace);
}

Dataset intervene_assign(const Dataset& data, std::size_t feature,
                         std::span<const double> values, StageTrace* trace) {
  data.check_feature(feature);
  if (values.size() != data.num_rows()) {
    fail(ErrorCode::kShape, std::to_string(values.size()) +
                                " values for " + std::to_string(data.num_rows()) +
                                " rows");
  }
  if (trace) {
    trace->record(Stage::kIntervention, "set feature values per observation");
    trace->tally(Stage::kIntervention, "assignments", 1);
  }
  Matrix m = data.features();
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(feature)) = values[i];
  }
  return data.with_features(std::move(m));
}

Dataset intervene_shift(const Dataset& data, std::size_t feature, double delta,
                        StageTrace* trace) {
  data.continuous_feature(feature);
  if (!std::isfinite(delta)) {
    fail(ErrorCode::kInvalidArgument, "shift must be finite");
  }
  if (trace) {
    trace->record(Stage::kIntervention, "shift feature values");
    trace->tally(Stage::kIntervention, "shifts", 1);
  }
  Matrix m = data.features();
  auto col = m.col(static_cast<Eigen::Index>(feature));
  for (Eigen::Index i = 0; i < col.size(); ++i) col(i) = col(i) + delta;
  return data.with_features(std::move(m));
}

Vector predict_batch(const PredictorHandle& predictor, const Dataset& data,
                     StageTrace* trace) {
  Vector out = predictor.predict(data.features());
  if (trace) {
    trace->record(Stage::kPrediction, "predict with the black-box model");
    trace->tally(Stage::kPrediction, "batches", 1);
    trace->tally(Stage::kPrediction, "rows_predicted",
                 static_cast<std::int64_t>(data.num_rows()));
  }
  return out;
}

Vector predict_batch(CachedPredictor& predictor, const Dataset& data,
                     StageTrace* trace) {
  if (trace) {
    trace->record(Stage::kPrediction, "predict with the black-box model");
  }
  return predictor.predict(data.features(), trace);
}

FiniteDifference finite_difference(const PredictorHandle& predictor,
                                   std::span<const FeatureMeta> schema,
                                   std::span<const double> x, std::size_t j,
                                   double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    fail(ErrorCode::kInvalidArgument, "step h must be > 0");
  }
  if (j >= schema.size() || x.size() != schema.size()) {
    fail(ErrorCode::kInvalidArgument, "feature index or point size mismatch");
  }
  if (schema[j].is_categorical()) {
    fail(ErrorCode::kUnsupportedKind,
         "finite differences need a continuous feature; '" + schema[j].name +
             "' is categorical");
  }
  Matrix rows(2, static_cast<Eigen::Index>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    rows(0, static_cast<Eigen::Index>(k)) = x[k];
    rows(1, static_cast<Eigen::Index>(k)) = x[k];
  }
  const auto jj = static_cast<Eigen::Index>(j);
  rows(0, jj) = x[j] + h;
  rows(1, jj) = x[j] - h;
  if (!(rows(0, jj) > rows(1, jj))) {
    fail(ErrorCode::kInvalidArgument, "step h is below the resolution of x_j");
  }
  const Vector f = predictor.predict(rows);
  FiniteDifference out;
  out.fd = f(0) - f(1);
  out.quotient = out.fd / (rows(0, jj) - rows(1, jj));
  return out;
}

double default_step(const FeatureMeta& meta) {
  if (meta.is_categorical() || !meta.observed_range) {
    fail(ErrorCode::kUnsupportedKind,
         "default step needs a continuous feature with an observed range");
  }
  const double width = meta.observed_range->max - meta.observed_range->min;
  if (width > 0.0) return 1e-4 * width;
  return 1e-4 * std::max(std::fabs(meta.observed_range->min), 1.0);
}

Vector pointwise_loss(const Vector& predictions, const Dataset& data,
                      const LossFunction& loss) {
  const Vector& y = data.target();
  if (predictions.size() != y.size()) {
    fail(ErrorCode::kShape, "prediction and target lengths differ");
  }
  Vector out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) out(i) = loss(predictions(i), y(i));
  return out;
}

namespace {

double mean_of(const Vector& v) {
  return mean(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

}  // namespace

double estimate_generalization_error(const PredictorHandle& predictor,
                                     const Dataset& data,
                                     const LossFunction& loss,
                                     StageTrace* trace) {
  CachedPredictor cached(predictor);
  return estimate_generalization_error(cached, data, loss, trace);
}

double estimate_generalization_error(CachedPredictor& predictor,
                                     const Dataset& data,
                                     const LossFunction& loss,
                                     StageTrace* trace) {
  data.target();
  const Vector losses = pointwise_loss(predict_batch(predictor, data, trace), data, loss);
  if (trace) {
    trace->record(Stage::kAggregation, "mean loss",
                  {{"loss", std::string(loss.tag())}});
  }
  return mean_of(losses);
}

}  // namespace sipa
