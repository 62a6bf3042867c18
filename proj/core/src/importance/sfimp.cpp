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

#include "sipa/importance/sfimp.hpp"

#include <numeric>
#include <string>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"
#include "sipa/core/stages.hpp"
#include "sipa/effects/coalition.hpp"

namespace sipa {

namespace {

std::span<const double> as_span(const Vector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

std::string_view mode_name(PerturbationMode mode) {
  return mode == PerturbationMode::kExhaustive ? "exhaustive" : "permutation";
}

class PfiPayout {
 public:
  PfiPayout(const PredictorHandle& predictor, const Dataset& data,
            const LossFunction& loss, const SfimpOptions& options,
            StageTrace* trace)
      : cached_(predictor),
        data_(data),
        loss_(loss),
        options_(options),
        trace_(trace),
        all_((Coalition{1} << data.num_features()) - 1) {
    if (options.mode == PerturbationMode::kPermutation) {
      perm_.resize(data.num_rows());
      std::iota(perm_.begin(), perm_.end(), std::size_t{0});
      Rng rng(options.seed);
      rng.shuffle(perm_);
    }
  }

  double operator()(Coalition known) {
    if (known == 0) return 0.0;
    return perturbed_error(all_ & ~known) - perturbed_error(all_);
  }

 private:
  double perturbed_error(Coalition perturbed) {
    if (const auto it = errors_.find(perturbed); it != errors_.end()) {
      return it->second;
    }
    const auto features = coalition_members(perturbed);
    double error = 0.0;
    if (features.empty() && options_.mode == PerturbationMode::kExhaustive) {
      // Same double average as below, so a feature the model ignores
      // cancels bit-exactly.
      const std::vector<double> per_donor(data_.num_rows(),
                                          mean(as_span(losses(data_))));
      error = mean(per_donor);
    } else if (features.empty()) {
      error = mean(as_span(losses(data_)));
    } else if (options_.mode == PerturbationMode::kPermutation) {
      error = mean(as_span(losses(permuted(features))));
    } else {
      // Donor l supplies the perturbed features; average over i, then l.
      const std::size_t n = data_.num_rows();
      std::vector<double> per_donor(n);
      std::vector<double> values(features.size());
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < features.size(); ++k) {
          values[k] = data_.value(l, features[k]);
        }
        per_donor[l] = mean(as_span(
            losses(intervene_replace(data_, features, values, trace_))));
      }
      error = mean(per_donor);
    }
    errors_.emplace(perturbed, error);
    return error;
  }

  Dataset permuted(const std::vector<std::size_t>& features) {
    Matrix m = data_.features();
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      for (std::size_t j : features) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            data_.value(perm_[i], j);
      }
    }
    if (trace_) {
      trace_->record(Stage::kIntervention, "permute perturbed features jointly",
                     {{"seed", options_.seed}});
    }
    return data_.with_features(std::move(m));
  }

  Vector losses(const Dataset& d) {
    return pointwise_loss(predict_batch(cached_, d, trace_), data_, loss_);
  }

  CachedPredictor cached_;
  const Dataset& data_;
  LossFunction loss_;
  SfimpOptions options_;
  StageTrace* trace_;
  Coalition all_;
  std::vector<std::size_t> perm_;
  std::unordered_map<Coalition, double> errors_;
};

void check_capacity(const Dataset& data, std::size_t max_features) {
  const std::size_t cap = std::min(max_features, kMaxCoalitionFeatures);
  if (data.num_features() > cap) {
    fail(ErrorCode::kCapacity,
         "SFIMP over " + std::to_string(data.num_features()) +
             " features exceeds the exact-enumeration cap of " +
             std::to_string(cap));
  }
}

}  // namespace

double pfi_payout(const PredictorHandle& predictor, const Dataset& data,
                  std::span<const std::size_t> coalition,
                  const LossFunction& loss, const SfimpOptions& options) {
  data.target();
  if (data.num_features() > kMaxCoalitionFeatures) {
    fail(ErrorCode::kCapacity, "too many features for coalition bookkeeping");
  }
  Coalition c = 0;
  for (std::size_t j : coalition) {
    data.check_feature(j);
    c |= Coalition{1} << j;
  }
  PfiPayout payout(predictor, data, loss, options, nullptr);
  return payout(c);
}

std::vector<ImportanceScore> sfimp_all(const PredictorHandle& predictor,
                                       const Dataset& data,
                                       const LossFunction& loss,
                                       const SfimpOptions& options) {
  data.target();
  check_capacity(data, options.max_features);
  const std::size_t p = data.num_features();

  StageTrace trace;
  Params sampling{{"n", static_cast<std::int64_t>(data.num_rows())}};
  if (options.mode == PerturbationMode::kPermutation) {
    sampling.emplace_back("seed", options.seed);
  }
  trace.record(Stage::kSampling, "all observations", std::move(sampling));
  trace.record(Stage::kIntervention,
               "perturb the features outside each coalition",
               {{"mode", std::string(mode_name(options.mode))},
                {"coalitions", static_cast<std::int64_t>(std::int64_t{1} << p)}});

  PfiPayout engine(predictor, data, loss, options, &trace);
  PayoutTable payout([&engine](Coalition c) { return engine(c); });
  std::vector<double> values;
  for (std::size_t j = 0; j < p; ++j) {
    values.push_back(shapley_value(
        p, j, [&payout](Coalition c) { return payout(c); }, options.max_features));
  }
  const double full = payout((Coalition{1} << p) - 1);
  trace.record(Stage::kAggregation,
               "Shapley-weighted marginal loss payouts over coalitions",
               {{"loss", std::string(loss.tag())}});

  std::vector<ImportanceScore> out;
  for (std::size_t j = 0; j < p; ++j) {
    ImportanceScore s;
    s.method = ImportanceMethod::kSfimp;
    s.feature = j;
    s.value = values[j];
    s.loss = std::string(loss.tag());
    if (options.mode == PerturbationMode::kPermutation) s.seeds = {options.seed};
    s.full_payout = full;
    s.trace = trace;
    out.push_back(std::move(s));
  }
  return out;
}

ImportanceScore sfimp(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t feature, const LossFunction& loss,
                      const SfimpOptions& options) {
  data.check_feature(feature);
  auto all = sfimp_all(predictor, data, loss, options);
  return std::move(all[feature]);
}

}  // namespace sipa
