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

#include "sipa/core/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "sipa/core/error.hpp"

namespace sipa {

std::string_view to_string(FeatureKind kind) noexcept {
  return kind == FeatureKind::kContinuous ? "continuous" : "categorical";
}

FeatureMeta FeatureMeta::continuous(std::string name) {
  FeatureMeta meta;
  meta.name = std::move(name);
  meta.kind = FeatureKind::kContinuous;
  return meta;
}

FeatureMeta FeatureMeta::categorical(std::string name,
                                     std::vector<std::string> levels) {
  FeatureMeta meta;
  meta.name = std::move(name);
  meta.kind = FeatureKind::kCategorical;
  meta.levels = std::move(levels);
  return meta;
}

double FeatureMeta::encode(std::string_view level) const {
  if (!is_categorical()) {
    fail(ErrorCode::kUnsupportedKind,
         "feature '" + name + "' is continuous; level '" + std::string(level) +
             "' given");
  }
  const auto it = std::find(levels.begin(), levels.end(), level);
  if (it == levels.end()) {
    fail(ErrorCode::kInvalidLevel, "level '" + std::string(level) +
                                       "' is not registered for feature '" +
                                       name + "'");
  }
  return static_cast<double>(it - levels.begin());
}

const std::string& FeatureMeta::decode(double code) const {
  if (!is_categorical() || !admits(code)) {
    fail(ErrorCode::kInvalidLevel,
         "code " + std::to_string(code) + " is not a level of '" + name + "'");
  }
  return levels[static_cast<std::size_t>(code)];
}

bool FeatureMeta::admits(double value) const noexcept {
  if (!std::isfinite(value)) return false;
  if (!is_categorical()) return true;
  return value >= 0.0 && value == std::floor(value) &&
         value < static_cast<double>(levels.size());
}

Dataset::Dataset(Matrix features, std::vector<FeatureMeta> meta,
                 std::optional<Vector> target)
    : features_(std::move(features)),
      meta_(std::move(meta)),
      target_(std::move(target)) {
  validate();
}

Dataset Dataset::from_columns(const std::vector<std::vector<double>>& columns,
                              std::optional<std::vector<double>> target,
                              std::vector<std::string> names) {
  if (columns.empty()) fail(ErrorCode::kShape, "dataset needs p >= 1 columns");
  const std::size_t n = columns.front().size();
  Matrix features(static_cast<Eigen::Index>(n),
                  static_cast<Eigen::Index>(columns.size()));
  std::vector<FeatureMeta> meta;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) {
      fail(ErrorCode::kShape, "column " + std::to_string(j) + " has " +
                                  std::to_string(columns[j].size()) +
                                  " rows, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          columns[j][i];
    }
    meta.push_back(FeatureMeta::continuous(
        j < names.size() ? names[j] : "x" + std::to_string(j + 1)));
  }
  std::optional<Vector> y;
  if (target) {
    y = Eigen::Map<const Vector>(target->data(),
                                 static_cast<Eigen::Index>(target->size()));
  }
  return Dataset(std::move(features), std::move(meta), std::move(y));
}

void Dataset::validate() {
  const auto n = num_rows();
  const auto p = static_cast<std::size_t>(features_.cols());
  if (n < 1) fail(ErrorCode::kShape, "dataset needs n >= 1 rows");
  if (p < 1) fail(ErrorCode::kShape, "dataset needs p >= 1 features");
  if (meta_.size() != p) {
    fail(ErrorCode::kShape, "metadata for " + std::to_string(meta_.size()) +
                                " features, matrix has " + std::to_string(p));
  }
  std::set<std::string, std::less<>> names;
  for (const auto& m : meta_) {
    if (!names.insert(m.name).second) {
      fail(ErrorCode::kInvalidArgument, "duplicate feature name '" + m.name + "'");
    }
    if (m.is_categorical() && m.levels.empty()) {
      fail(ErrorCode::kInvalidArgument,
           "categorical feature '" + m.name + "' has no levels");
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    auto& m = meta_[j];
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = value(i, j);
      if (std::isnan(v)) {
        fail(ErrorCode::kMissingValue, "missing value at row " +
                                           std::to_string(i) + ", feature '" +
                                           m.name + "'");
      }
      if (!m.admits(v)) {
        fail(m.is_categorical() ? ErrorCode::kInvalidLevel
                                : ErrorCode::kInvalidArgument,
             "value " + std::to_string(v) + " at row " + std::to_string(i) +
                 " is not valid for feature '" + m.name + "'");
      }
      if (i == 0 || v < lo) lo = v;
      if (i == 0 || v > hi) hi = v;
    }
    if (!m.is_categorical()) {
      if (!m.observed_range) m.observed_range = ObservedRange{lo, hi};
      if (m.observed_range->min > m.observed_range->max) {
        fail(ErrorCode::kInvalidArgument,
             "observed range of '" + m.name + "' has min > max");
      }
    } else {
      m.observed_range.reset();
    }
  }
  if (target_) {
    if (static_cast<std::size_t>(target_->size()) != n) {
      fail(ErrorCode::kShape, "target has " + std::to_string(target_->size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (Eigen::Index i = 0; i < target_->size(); ++i) {
      if (!std::isfinite((*target_)(i))) {
        fail(ErrorCode::kMissingValue,
             "missing or non-finite target at row " + std::to_string(i));
      }
    }
  }
}

std::vector<double> Dataset::row(std::size_t i) const {
  check_row(i);
  const auto r = features_.row(static_cast<Eigen::Index>(i));
  return {r.begin(), r.end()};
}

std::vector<double> Dataset::column(std::size_t j) const {
  check_feature(j);
  std::vector<double> out(num_rows());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value(i, j);
  return out;
}

const FeatureMeta& Dataset::meta(std::size_t j) const {
  check_feature(j);
  return meta_[j];
}

const Vector& Dataset::target() const {
  if (!target_) fail(ErrorCode::kMissingTarget, "dataset has no target");
  return *target_;
}

std::optional<std::size_t> Dataset::find_feature(std::string_view name) const {
  for (std::size_t j = 0; j < meta_.size(); ++j) {
    if (meta_[j].name == name) return j;
  }
  return std::nullopt;
}

void Dataset::check_feature(std::size_t j) const {
  if (j >= meta_.size()) {
    fail(ErrorCode::kInvalidArgument,
         "feature index " + std::to_string(j) + " out of range (p = " +
             std::to_string(meta_.size()) + ")");
  }
}

void Dataset::check_row(std::size_t i) const {
  if (i >= num_rows()) {
    fail(ErrorCode::kInvalidArgument,
         "row index " + std::to_string(i) + " out of range (n = " +
             std::to_string(num_rows()) + ")");
  }
}

const FeatureMeta& Dataset::continuous_feature(std::size_t j) const {
  const auto& m = meta(j);
  if (m.is_categorical()) {
    fail(ErrorCode::kUnsupportedKind,
         "feature '" + m.name + "' is categorical; a continuous feature is required");
  }
  return m;
}

Dataset Dataset::with_features(Matrix features) const {
  if (features.cols() != features_.cols()) {
    fail(ErrorCode::kShape, "replacement matrix has " +
                                std::to_string(features.cols()) +
                                " columns, expected " +
                                std::to_string(features_.cols()));
  }
  if (target_ && features.rows() != features_.rows()) {
    fail(ErrorCode::kShape, "replacement matrix changes the row count of a "
                            "dataset with target");
  }
  Dataset out;
  out.features_ = std::move(features);
  out.meta_ = meta_;
  out.target_ = target_;
  out.validate();
  return out;
}

Dataset Dataset::select_rows(std::span<const std::size_t> rows) const {
  Matrix features(static_cast<Eigen::Index>(rows.size()), features_.cols());
  std::optional<Vector> target;
  if (target_) target = Vector(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    check_row(rows[k]);
    const auto src = static_cast<Eigen::Index>(rows[k]);
    features.row(static_cast<Eigen::Index>(k)) = features_.row(src);
    if (target) (*target)(static_cast<Eigen::Index>(k)) = (*target_)(src);
  }
  Dataset out;
  out.features_ = std::move(features);
  out.meta_ = meta_;
  out.target_ = std::move(target);
  out.validate();
  return out;
}

Dataset Dataset::without_target() const {
  Dataset out = *this;
  out.target_.reset();
  return out;
}

double Dataset::encode(std::size_t j, const FeatureValue& value) const {
  const auto& m = meta(j);
  if (const auto* level = std::get_if<std::string>(&value)) return m.encode(*level);
  const double v = std::get<double>(value);
  if (!m.admits(v)) {
    fail(m.is_categorical() ? ErrorCode::kInvalidLevel
                            : ErrorCode::kInvalidArgument,
         "value " + std::to_string(v) + " is not valid for feature '" + m.name +
             "'");
  }
  return v;
}

}  // namespace sipa
