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

#include "sipa/effects/shapley.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"
#include "sipa/core/stages.hpp"
#include "sipa/effects/coalition.hpp"
#include "sipa/effects/partial_dependence.hpp"

namespace sipa {

double ShapleyExplanation::value(std::size_t feature) const {
  for (std::size_t k = 0; k < features.size(); ++k) {
    if (features[k] == feature) return values[k];
  }
  fail(ErrorCode::kInvalidArgument,
       "feature " + std::to_string(feature) + " was not explained");
}

namespace {

void check_point(const Dataset& data, std::span<const double> x) {
  if (x.size() != data.num_features()) {
    fail(ErrorCode::kShape, "explained point has " + std::to_string(x.size()) +
                                " values, data has " +
                                std::to_string(data.num_features()) +
                                " features");
  }
  for (std::size_t j = 0; j < x.size(); ++j) data.encode(j, FeatureValue(x[j]));
}

// Payout engine shared by pd_payout and shapley_exact.
class PdPayout {
 public:
  PdPayout(const PredictorHandle& predictor, const Dataset& data,
           std::span<const double> x, StageTrace* trace)
      : cached_(predictor), data_(data), x_(x.begin(), x.end()), trace_(trace) {}

  double operator()(Coalition c) {
    if (c == 0) return 0.0;
    const auto members = coalition_members(c);
    std::vector<double> values;
    values.reserve(members.size());
    for (std::size_t j : members) values.push_back(x_[j]);
    return partial_dependence_at(cached_, data_, members, values, trace_) -
           mean_prediction();
  }

  double mean_prediction() {
    if (!mean_) {
      const Vector f = predict_batch(cached_, data_, trace_);
      mean_ = mean(std::span<const double>(f.data(),
                                           static_cast<std::size_t>(f.size())));
    }
    return *mean_;
  }

 private:
  CachedPredictor cached_;
  const Dataset& data_;
  std::vector<double> x_;
  StageTrace* trace_;
  std::optional<double> mean_;
};

Coalition full_coalition(std::size_t p) { return (Coalition{1} << p) - 1; }

}  // namespace

double pd_payout(const PredictorHandle& predictor, const Dataset& data,
                 std::span<const double> x,
                 std::span<const std::size_t> coalition) {
  check_point(data, x);
  if (data.num_features() > kMaxCoalitionFeatures) {
    fail(ErrorCode::kCapacity, "too many features for coalition bookkeeping");
  }
  Coalition c = 0;
  for (std::size_t j : coalition) {
    data.check_feature(j);
    c |= Coalition{1} << j;
  }
  PdPayout payout(predictor, data, x, nullptr);
  return payout(c);
}

ShapleyExplanation shapley_exact(const PredictorHandle& predictor,
                                 const Dataset& data, std::span<const double> x,
                                 std::optional<std::size_t> feature,
                                 const ShapleyOptions& options) {
  check_point(data, x);
  const std::size_t p = data.num_features();
  if (feature) data.check_feature(*feature);
  const std::size_t cap = std::min(options.max_features, kMaxCoalitionFeatures);
  if (p > cap) {
    fail(ErrorCode::kCapacity,
         "exact Shapley over " + std::to_string(p) +
             " features exceeds the cap of " + std::to_string(cap) +
             "; use the Monte Carlo estimator");
  }

  ShapleyExplanation out;
  out.x.assign(x.begin(), x.end());
  out.mode = ShapleyMode::kExact;
  auto& trace = out.trace;
  trace.record(Stage::kSampling, "all observations as background",
               {{"n", static_cast<std::int64_t>(data.num_rows())}});
  trace.record(Stage::kIntervention,
               "fix coalition features at the explained point",
               {{"coalitions", static_cast<std::int64_t>(std::int64_t{1} << p)}});

  PdPayout engine(predictor, data, x, &trace);
  PayoutTable payout([&engine](Coalition c) { return engine(c); });
  if (feature) {
    out.features = {*feature};
  } else {
    out.features.resize(p);
    std::iota(out.features.begin(), out.features.end(), std::size_t{0});
  }
  for (std::size_t j : out.features) {
    out.values.push_back(shapley_value(
        p, j, [&payout](Coalition c) { return payout(c); }, cap));
  }
  out.full_payout = payout(full_coalition(p));
  trace.record(Stage::kAggregation,
               "weighted sum of marginal contributions over coalitions",
               {{"max_features", static_cast<std::int64_t>(cap)}});
  return out;
}

ShapleyExplanation shapley_mc(const PredictorHandle& predictor,
                              const Dataset& data, std::span<const double> x,
                              std::size_t feature, std::size_t iterations,
                              std::uint64_t seed) {
  check_point(data, x);
  data.check_feature(feature);
  if (iterations == 0) {
    fail(ErrorCode::kInvalidArgument, "Monte Carlo Shapley needs M >= 1");
  }
  const std::size_t p = data.num_features();
  const std::size_t n = data.num_rows();

  ShapleyExplanation out;
  out.x.assign(x.begin(), x.end());
  out.features = {feature};
  out.mode = ShapleyMode::kMonteCarlo;
  out.iterations = iterations;
  out.seed = seed;
  auto& trace = out.trace;
  trace.record(Stage::kSampling,
               "random feature orderings and background rows",
               {{"iterations", static_cast<std::int64_t>(iterations)},
                {"seed", seed}});

  // Rows 2m and 2m+1 hold x_+ and x_- of iteration m.
  Matrix rows(static_cast<Eigen::Index>(2 * iterations),
              static_cast<Eigen::Index>(p));
  Rng rng(seed);
  std::vector<std::size_t> order(p);
  for (std::size_t m = 0; m < iterations; ++m) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    const auto z = static_cast<std::size_t>(rng.uniform_index(n));
    const auto plus = static_cast<Eigen::Index>(2 * m);
    const auto minus = plus + 1;
    bool before = true;
    for (std::size_t pos = 0; pos < p; ++pos) {
      const std::size_t j = order[pos];
      const auto c = static_cast<Eigen::Index>(j);
      if (j == feature) {
        rows(plus, c) = x[j];
        rows(minus, c) = data.value(z, j);
        before = false;
      } else if (before) {
        rows(plus, c) = x[j];
        rows(minus, c) = x[j];
      } else {
        rows(plus, c) = data.value(z, j);
        rows(minus, c) = data.value(z, j);
      }
    }
  }
  trace.record(Stage::kIntervention,
               "splice explained point and background row along the ordering",
               {{"rows", static_cast<std::int64_t>(2 * iterations)}});

  CachedPredictor cached(predictor);
  trace.record(Stage::kPrediction, "predict with the black-box model");
  const Vector f = cached.predict(rows, &trace);
  std::vector<double> contributions(iterations);
  for (std::size_t m = 0; m < iterations; ++m) {
    contributions[m] = f(static_cast<Eigen::Index>(2 * m)) -
                       f(static_cast<Eigen::Index>(2 * m + 1));
  }
  const double estimate = mean(contributions);
  const double se =
      iterations > 1
          ? sample_sd(contributions) / std::sqrt(static_cast<double>(iterations))
          : 0.0;
  out.values = {estimate};
  out.standard_errors = {se};

  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Vector f_data = predict_batch(cached, data);
  out.full_payout =
      partial_dependence_at(cached, data, all, x) -
      mean(std::span<const double>(f_data.data(),
                                   static_cast<std::size_t>(f_data.size())));
  trace.record(Stage::kAggregation, "mean of sampled marginal contributions",
               {{"standard_error", se}});
  return out;
}

}  // namespace sipa
