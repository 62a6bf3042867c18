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

#ifndef SIPA_CORE_DATASET_HPP_
#define SIPA_CORE_DATASET_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sipa/core/matrix.hpp"

namespace sipa {

enum class FeatureKind { kContinuous, kCategorical };

std::string_view to_string(FeatureKind kind) noexcept;

struct ObservedRange {
  double min = 0.0;
  double max = 0.0;
};

// Per-column metadata. Categorical values are stored in the feature matrix as
// the index of their level (0, 1, ...), so `levels` is the decoding table.
struct FeatureMeta {
  std::string name;
  FeatureKind kind = FeatureKind::kContinuous;
  std::vector<std::string> levels;
  // Filled from the data at Dataset construction when absent. Interventions
  // carry the original range forward even when they leave it.
  std::optional<ObservedRange> observed_range;

  static FeatureMeta continuous(std::string name);
  static FeatureMeta categorical(std::string name,
                                 std::vector<std::string> levels);

  bool is_categorical() const noexcept {
    return kind == FeatureKind::kCategorical;
  }

  // Level name -> stored code. Throws kInvalidLevel for unknown names.
  double encode(std::string_view level) const;
  const std::string& decode(double code) const;
  // True when `value` may be stored in this column.
  bool admits(double value) const noexcept;
};

// A feature value as a caller may spell it: a number, or a level name for
// categorical columns.
using FeatureValue = std::variant<double, std::string>;

// Immutable tabular sample: n observations x p features, optional target.
class Dataset {
 public:
  // Validates shape, rejects missing (NaN) and infinite values, checks
  // categorical codes against their levels and name uniqueness.
  Dataset(Matrix features, std::vector<FeatureMeta> meta,
          std::optional<Vector> target = std::nullopt);

  // All-continuous convenience constructor; names default to x1, x2, ...
  static Dataset from_columns(const std::vector<std::vector<double>>& columns,
                              std::optional<std::vector<double>> target = {},
                              std::vector<std::string> names = {});

  std::size_t num_rows() const noexcept {
    return static_cast<std::size_t>(features_.rows());
  }
  std::size_t num_features() const noexcept { return meta_.size(); }

  const Matrix& features() const noexcept { return features_; }
  double value(std::size_t row, std::size_t feature) const {
    return features_(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(feature));
  }
  std::vector<double> row(std::size_t i) const;
  std::vector<double> column(std::size_t j) const;

  std::span<const FeatureMeta> meta() const noexcept { return meta_; }
  const FeatureMeta& meta(std::size_t j) const;

  bool has_target() const noexcept { return target_.has_value(); }
  // Throws kMissingTarget when absent.
  const Vector& target() const;

  std::optional<std::size_t> find_feature(std::string_view name) const;

  // Throws kInvalidArgument for an out-of-range index.
  void check_feature(std::size_t j) const;
  void check_row(std::size_t i) const;
  // check_feature plus kUnsupportedKind for categorical columns.
  const FeatureMeta& continuous_feature(std::size_t j) const;

  // Same schema and target, new feature values (validated).
  Dataset with_features(Matrix features) const;
  Dataset select_rows(std::span<const std::size_t> rows) const;
  Dataset without_target() const;

  // Encodes a FeatureValue for column j (kInvalidLevel / kUnsupportedKind on
  // mismatch).
  double encode(std::size_t j, const FeatureValue& value) const;

 private:
  Dataset() = default;
  void validate();

  Matrix features_;
  std::vector<FeatureMeta> meta_;
  std::optional<Vector> target_;
};

}  // namespace sipa

#endif  // SIPA_CORE_DATASET_HPP_
