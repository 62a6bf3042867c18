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

#include "sipa/effects/lime.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/rng.hpp"

namespace sipa {

LimeExplanation lime_explain(const PredictorHandle& predictor,
                             const Dataset& data, std::span<const double> x,
                             std::size_t feature, const LimeOptions& options,
                             std::uint64_t seed) {
  data.continuous_feature(feature);
  if (x.size() != data.num_features()) {
    fail(ErrorCode::kShape, "explained point has the wrong number of features");
  }
  for (std::size_t j = 0; j < x.size(); ++j) data.encode(j, FeatureValue(x[j]));
  if (options.num_samples < 3) {
    fail(ErrorCode::kInvalidArgument, "LIME needs num_samples >= 3");
  }
  const auto column = data.column(feature);
  const double sd = column.size() > 1 ? sample_sd(column) : 0.0;
  const double width = options.kernel_width.value_or(0.75 * sd);
  if (!(width > 0.0) || !std::isfinite(width)) {
    fail(ErrorCode::kInvalidArgument,
         "kernel width must be > 0 (column sd is " + std::to_string(sd) + ")");
  }

  LimeExplanation out;
  out.x.assign(x.begin(), x.end());
  out.feature = feature;
  out.kernel_width = width;
  out.perturbation_sd = sd;
  out.num_samples = options.num_samples;
  out.seed = seed;
  auto& trace = out.trace;
  trace.record(Stage::kSampling, "Gaussian perturbations of the feature",
               {{"num_samples", static_cast<std::int64_t>(options.num_samples)},
                {"sd", sd},
                {"seed", seed}});

  const auto n = static_cast<Eigen::Index>(options.num_samples);
  const auto j = static_cast<Eigen::Index>(feature);
  Matrix rows(n, static_cast<Eigen::Index>(x.size()));
  Rng rng(seed);
  for (Eigen::Index s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      rows(s, static_cast<Eigen::Index>(k)) = x[k];
    }
    rows(s, j) = x[feature] + sd * rng.normal();
  }
  trace.record(Stage::kIntervention,
               "replace the feature by perturbed values, others fixed");

  trace.record(Stage::kPrediction, "predict with the black-box model");
  CachedPredictor cached(predictor);
  const Vector f = cached.predict(rows, &trace);

  // Weighted least squares on the centered offset d = z - x_j:
  //   sqrt(w) * [1, d] * (a, b)' ~ sqrt(w) * f
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  bool varied = false;
  for (Eigen::Index s = 0; s < n; ++s) {
    const double d = rows(s, j) - x[feature];
    const double w = std::exp(-(d * d) / (width * width));
    const double root = std::sqrt(w);
    design(s, 0) = root;
    design(s, 1) = root * d;
    rhs(s) = root * f(s);
    out.perturbed.push_back(rows(s, j));
    out.weights.push_back(w);
    out.predictions.push_back(f(s));
    if (rows(s, j) != rows(0, j)) varied = true;
  }
  if (!varied) {
    fail(ErrorCode::kSingularFit, "all perturbed values are equal");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 2) {
    fail(ErrorCode::kSingularFit, "weighted design matrix is rank deficient");
  }
  const Eigen::VectorXd coef = qr.solve(rhs);
  out.slope = coef(1);
  out.intercept = coef(0) - coef(1) * x[feature];
  if (!std::isfinite(out.slope) || !std::isfinite(out.intercept)) {
    fail(ErrorCode::kSingularFit, "surrogate coefficients are not finite");
  }
  trace.record(Stage::kAggregation,
               "proximity-weighted least-squares line (QR)",
               {{"kernel_width", width}});
  return out;
}

}  // namespace sipa
