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

#include "sipa/importance/permutation_importance.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"
#include "sipa/core/stages.hpp"

namespace sipa {

namespace {

std::span<const double> as_span(const Vector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

// Loss changes for all (i, l): entry (i, k) belongs to observation i with
// x_j replaced by the value of observation order[k].
struct LossChanges {
  std::vector<std::size_t> order;
  Matrix delta;
  StageTrace trace;
};

LossChanges loss_changes(const PredictorHandle& predictor, const Dataset& data,
                         std::size_t feature, const LossFunction& loss) {
  data.check_feature(feature);
  data.target();
  const std::size_t n = data.num_rows();
  LossChanges out;
  auto& trace = out.trace;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return data.value(a, feature) < data.value(b, feature);
                   });
  trace.record(Stage::kSampling, "all observations, each value of the feature",
               {{"n", static_cast<std::int64_t>(n)}});

  CachedPredictor cached(predictor);
  const Vector baseline =
      pointwise_loss(predict_batch(cached, data, &trace), data, loss);
  out.delta.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const std::size_t features[] = {feature};
  for (std::size_t k = 0; k < n; ++k) {
    const double value = data.value(out.order[k], feature);
    const Dataset substituted =
        intervene_replace(data, features, std::span<const double>(&value, 1), &trace);
    const Vector losses =
        pointwise_loss(predict_batch(cached, substituted, &trace), data, loss);
    out.delta.col(static_cast<Eigen::Index>(k)) = losses - baseline;
  }
  return out;
}

EffectCurve make_curve(const Dataset& data, const LossChanges& changes,
                       std::size_t feature, const std::string& method) {
  EffectCurve curve;
  curve.method = method;
  curve.features = {feature};
  curve.trace = changes.trace;
  curve.points.reserve(changes.order.size());
  for (std::size_t l : changes.order) {
    curve.points.push_back({{data.value(l, feature)}, 0.0});
  }
  return curve;
}

std::vector<double> column_means(const Matrix& delta) {
  std::vector<double> out(static_cast<std::size_t>(delta.cols()));
  for (Eigen::Index k = 0; k < delta.cols(); ++k) {
    const Vector col = delta.col(k);
    out[static_cast<std::size_t>(k)] = mean(as_span(col));
  }
  return out;
}

}  // namespace

ImportanceScore pfi_permutation(const PredictorHandle& predictor,
                                const Dataset& data, std::size_t feature,
                                const LossFunction& loss, std::size_t repeats,
                                std::uint64_t seed) {
  data.check_feature(feature);
  data.target();
  if (repeats == 0) fail(ErrorCode::kInvalidArgument, "repeats must be >= 1");

  ImportanceScore score;
  score.method = ImportanceMethod::kPfiPermutation;
  score.feature = feature;
  score.loss = std::string(loss.tag());
  score.repeats = repeats;
  auto& trace = score.trace;
  trace.record(Stage::kSampling, "all observations",
               {{"n", static_cast<std::int64_t>(data.num_rows())},
                {"seed", seed},
                {"repeats", static_cast<std::int64_t>(repeats)}});

  CachedPredictor cached(predictor);
  const double base = mean(as_span(
      pointwise_loss(predict_batch(cached, data, &trace), data, loss)));
  Rng seeds(seed);
  for (std::size_t r = 0; r < repeats; ++r) {
    const std::uint64_t s = seeds.next_u64();
    score.seeds.push_back(s);
    const Dataset permuted = intervene_permute(data, feature, s, &trace);
    const double permuted_error = mean(as_span(
        pointwise_loss(predict_batch(cached, permuted, &trace), data, loss)));
    score.replicates.push_back(permuted_error - base);
  }
  // The last repeat's seed would otherwise be the only one left in the trace.
  trace.record(Stage::kIntervention, "", {{"seed", seed}});
  score.value = mean(score.replicates);
  trace.record(Stage::kAggregation,
               "mean over repeats of permuted minus original mean loss",
               {{"loss", std::string(loss.tag())}});
  return score;
}

EffectCurve ici_curve(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t observation, std::size_t feature,
                      const LossFunction& loss) {
  data.check_row(observation);
  const LossChanges changes = loss_changes(predictor, data, feature, loss);
  EffectCurve curve = make_curve(data, changes, feature, "ici");
  curve.observation = observation;
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    curve.points[k].y = changes.delta(static_cast<Eigen::Index>(observation),
                                      static_cast<Eigen::Index>(k));
  }
  curve.trace.record(Stage::kAggregation, "loss change of one observation",
                     {{"loss", std::string(loss.tag())}});
  return curve;
}

EffectCurve pi_curve(const PredictorHandle& predictor, const Dataset& data,
                     std::size_t feature, const LossFunction& loss) {
  const LossChanges changes = loss_changes(predictor, data, feature, loss);
  EffectCurve curve = make_curve(data, changes, feature, "pi");
  const auto means = column_means(changes.delta);
  for (std::size_t k = 0; k < curve.points.size(); ++k) curve.points[k].y = means[k];
  curve.trace.record(Stage::kAggregation, "mean loss change over observations",
                     {{"loss", std::string(loss.tag())}});
  return curve;
}

ImportanceScore pfi_exhaustive(const PredictorHandle& predictor,
                               const Dataset& data, std::size_t feature,
                               const LossFunction& loss) {
  const EffectCurve pi = pi_curve(predictor, data, feature, loss);
  ImportanceScore score;
  score.method = ImportanceMethod::kPfiExhaustive;
  score.feature = feature;
  score.loss = std::string(loss.tag());
  score.trace = pi.trace;
  score.value = mean(pi.values());
  score.trace.record(Stage::kAggregation, "mean of the PI curve");
  return score;
}

}  // namespace sipa
