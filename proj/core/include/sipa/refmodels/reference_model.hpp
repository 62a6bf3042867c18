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

#ifndef SIPA_REFMODELS_REFERENCE_MODEL_HPP_
#define SIPA_REFMODELS_REFERENCE_MODEL_HPP_

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/matrix.hpp"
#include "sipa/core/predictor.hpp"

namespace sipa::refmodels {

enum class ModelKind { kLinear, kKnn, kStump };

std::string_view to_string(ModelKind kind) noexcept;

// intercept + sum of coefficients over the expanded design. Continuous
// features contribute one column; a categorical feature with L levels
// contributes L - 1 indicator columns (the first level is the reference).
struct LinearParams {
  double intercept = 0.0;
  std::vector<double> coefficients;
};

// Mean target of the k nearest stored rows. Distance: squared differences
// on continuous features plus 1 per mismatching categorical level; distance
// ties go to the lower row index.
struct KnnParams {
  std::size_t k = 1;
  Matrix rows;
  std::vector<double> targets;
};

// One split. Continuous: left when x <= threshold. Categorical: left when
// x == threshold (a level code). No split at all when the target is
// constant or no feature varies.
struct StumpParams {
  bool has_split = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  double left = 0.0;
  double right = 0.0;
};

// Small deterministic black boxes for tests, examples and the CLI.
class ReferenceModel {
 public:
  using Params = std::variant<LinearParams, KnnParams, StumpParams>;

  ReferenceModel(std::vector<FeatureMeta> schema, Params params);

  ModelKind kind() const noexcept;
  std::size_t num_features() const noexcept { return schema_.size(); }
  const std::vector<FeatureMeta>& schema() const noexcept { return schema_; }
  const Params& params() const noexcept { return *params_; }

  double predict_row(std::span<const double> row) const;
  Vector predict(const Matrix& rows) const;
  // Handle sharing this model's parameters; safe for concurrent calls.
  PredictorHandle handle() const;

  // Self-describing, tab-separated text; doubles in shortest round-trip form.
  std::string serialize() const;
  static ReferenceModel deserialize(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static ReferenceModel load(const std::filesystem::path& path);

 private:
  std::vector<FeatureMeta> schema_;
  std::shared_ptr<const Params> params_;
};

// Least squares with intercept via column-pivoted QR. Requires n > p and a
// target; throws kSingularFit for a rank-deficient design.
ReferenceModel fit_linear(const Dataset& data);

// Throws kInvalidArgument unless 1 <= k <= n.
ReferenceModel fit_knn(const Dataset& data, std::size_t k);

// Squared-error split scanning midpoints of sorted unique values (and each
// level of categorical features); ties go to the lower feature index, then
// the lower threshold.
ReferenceModel fit_stump(const Dataset& data);

}  // namespace sipa::refmodels

#endif  // SIPA_REFMODELS_REFERENCE_MODEL_HPP_
