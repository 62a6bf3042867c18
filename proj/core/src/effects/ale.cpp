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

#include "sipa/effects/ale.hpp"

#include <algorithm>
#include <string>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/stages.hpp"

namespace sipa {

namespace {

// Interval index (1-based, into edges) of each value; 0 marks "outside".
std::size_t interval_of(const std::vector<double>& edges, double v) {
  if (v < edges.front() || v > edges.back()) return 0;
  if (v == edges.front()) return 1;
  const auto it = std::lower_bound(edges.begin(), edges.end(), v);
  return static_cast<std::size_t>(it - edges.begin());
}

std::vector<std::size_t> interval_counts(const std::vector<double>& edges,
                                         const std::vector<double>& values) {
  std::vector<std::size_t> counts(edges.size(), 0);
  for (double v : values) {
    const std::size_t k = interval_of(edges, v);
    if (k == 0) {
      fail(ErrorCode::kInvalidArgument,
           "value " + std::to_string(v) + " lies outside the ALE edges");
    }
    ++counts[k];
  }
  return counts;
}

}  // namespace

std::vector<double> merge_empty_intervals(std::vector<double> edges,
                                          const std::vector<double>& values) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() < 2) {
    fail(ErrorCode::kDegenerateBinning,
         "feature has a single distinct value; no interval to accumulate over");
  }
  for (;;) {
    const auto counts = interval_counts(edges, values);
    std::size_t empty = 0;
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (counts[k] == 0) {
        empty = k;
        break;
      }
    }
    if (empty == 0) return edges;
    if (edges.size() == 2) {
      fail(ErrorCode::kDegenerateBinning, "interval still empty after merging");
    }
    // Drop the edge shared with the neighbour being merged into.
    const std::size_t drop = empty == 1 ? 1 : empty - 1;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
  }
}

std::vector<double> ale_interval_edges(const Dataset& data, std::size_t feature,
                                       std::size_t num_intervals) {
  data.continuous_feature(feature);
  if (num_intervals < 1) {
    fail(ErrorCode::kInvalidArgument, "ALE needs at least one interval");
  }
  auto sorted = data.column(feature);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const std::size_t k_max = num_intervals;
  std::vector<double> edges{sorted.front()};
  for (std::size_t k = 1; k <= k_max; ++k) {
    // Inverse ECDF at k/K: smallest order statistic with F >= k/K.
    const std::size_t rank = (n * k + k_max - 1) / k_max;
    edges.push_back(sorted[rank - 1]);
  }
  return merge_empty_intervals(std::move(edges), sorted);
}

EffectCurve ale_first_order(const PredictorHandle& predictor,
                            const Dataset& data, std::size_t feature,
                            std::size_t num_intervals) {
  data.continuous_feature(feature);
  if (num_intervals < 1) {
    fail(ErrorCode::kInvalidArgument, "ALE needs at least one interval");
  }
  auto curve = ale_first_order(predictor, data, feature,
                               ale_interval_edges(data, feature, num_intervals));
  curve.trace.record(Stage::kIntervention, "",
                     {{"requested_intervals",
                       static_cast<std::int64_t>(num_intervals)}});
  return curve;
}

EffectCurve ale_first_order(const PredictorHandle& predictor,
                            const Dataset& data, std::size_t feature,
                            std::vector<double> edges) {
  data.continuous_feature(feature);
  const auto x = data.column(feature);
  edges = merge_empty_intervals(std::move(edges), x);
  const std::size_t num_intervals = edges.size() - 1;
  const std::size_t n = data.num_rows();

  std::vector<std::size_t> bin(n);
  std::vector<double> upper(n);
  std::vector<double> lower(n);
  for (std::size_t i = 0; i < n; ++i) {
    bin[i] = interval_of(edges, x[i]);
    upper[i] = edges[bin[i]];
    lower[i] = edges[bin[i] - 1];
  }

  EffectCurve curve;
  curve.method = "ale";
  curve.features = {feature};
  auto& trace = curve.trace;
  trace.record(Stage::kSampling, "all observations, binned by quantile intervals",
               {{"n", static_cast<std::int64_t>(n)}});
  trace.record(Stage::kIntervention,
               "move each observation to its interval boundaries",
               {{"intervals", static_cast<std::int64_t>(num_intervals)}});

  CachedPredictor cached(predictor);
  const Vector f_upper =
      predict_batch(cached, intervene_assign(data, feature, upper, &trace), &trace);
  const Vector f_lower =
      predict_batch(cached, intervene_assign(data, feature, lower, &trace), &trace);

  // Interval-wise mean of the observation-wise differences, in row order.
  std::vector<std::vector<double>> diffs(num_intervals + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    diffs[bin[i]].push_back(f_upper(r) - f_lower(r));
  }
  std::vector<double> accumulated(num_intervals + 1, 0.0);
  for (std::size_t k = 1; k <= num_intervals; ++k) {
    accumulated[k] = accumulated[k - 1] + mean(diffs[k]);
  }

  std::vector<double> per_observation(n);
  for (std::size_t i = 0; i < n; ++i) per_observation[i] = accumulated[bin[i]];
  const double constant = mean(per_observation);

  trace.record(Stage::kAggregation,
               "interval means of differences, accumulated and centered",
               {{"centering_constant", constant}});
  for (std::size_t k = 0; k <= num_intervals; ++k) {
    curve.points.push_back({{edges[k]}, accumulated[k] - constant});
  }
  return curve;
}

}  // namespace sipa
