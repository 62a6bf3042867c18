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

#include "sipa/effects/grid.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sipa/core/error.hpp"

namespace sipa {

Grid::Grid(std::vector<std::size_t> features,
           std::vector<std::vector<double>> axes, GridSource source)
    : features_(std::move(features)), axes_(std::move(axes)), source_(source) {
  for (const auto& a : axes_) {
    if (a.empty()) fail(ErrorCode::kInvalidArgument, "grid has no points");
  }
  if (axes_.empty()) fail(ErrorCode::kInvalidArgument, "grid has no features");
}

Grid Grid::observed(const Dataset& data, std::size_t feature) {
  const auto& meta = data.meta(feature);
  std::vector<double> values;
  if (meta.is_categorical()) {
    for (std::size_t l = 0; l < meta.levels.size(); ++l) {
      values.push_back(static_cast<double>(l));
    }
  } else {
    values = data.column(feature);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  return Grid({feature}, {std::move(values)}, GridSource::kObserved);
}

Grid Grid::equidistant(const Dataset& data, std::size_t feature,
                       std::size_t k) {
  const auto& meta = data.continuous_feature(feature);
  if (k == 0) fail(ErrorCode::kInvalidArgument, "equidistant grid needs k >= 1");
  const double lo = meta.observed_range->min;
  const double hi = meta.observed_range->max;
  std::vector<double> values;
  if (k == 1 || lo == hi) {
    values.push_back(lo + (hi - lo) / 2.0);
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      // Endpoints are set exactly; interior points by interpolation.
      const double t = static_cast<double>(i) / static_cast<double>(k - 1);
      values.push_back(i + 1 == k ? hi : lo + t * (hi - lo));
    }
  }
  return Grid({feature}, {std::move(values)}, GridSource::kEquidistant);
}

Grid Grid::custom(const Dataset& data, std::size_t feature,
                  std::vector<double> values) {
  const auto& meta = data.meta(feature);
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "grid has no points");
  for (double v : values) data.encode(feature, FeatureValue(v));
  if (meta.is_categorical()) {
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorCode::kInvalidArgument, "grid levels must be distinct");
    }
  } else {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (!(values[i - 1] < values[i])) {
        fail(ErrorCode::kInvalidArgument,
             "continuous grid values must be strictly increasing");
      }
    }
  }
  return Grid({feature}, {std::move(values)}, GridSource::kCustom);
}

Grid Grid::cartesian(std::span<const Grid> axes) {
  if (axes.empty()) fail(ErrorCode::kInvalidArgument, "grid has no features");
  std::vector<std::size_t> features;
  std::vector<std::vector<double>> values;
  GridSource source = axes.front().source();
  for (const auto& g : axes) {
    for (std::size_t a = 0; a < g.dimension(); ++a) {
      const std::size_t f = g.features()[a];
      if (std::find(features.begin(), features.end(), f) != features.end()) {
        fail(ErrorCode::kInvalidArgument,
             "feature " + std::to_string(f) + " appears twice in grid");
      }
      features.push_back(f);
      values.push_back(g.axis(a));
    }
    if (g.source() != source) source = GridSource::kCustom;
  }
  return Grid(std::move(features), std::move(values), source);
}

std::size_t Grid::size() const noexcept {
  std::size_t n = 1;
  for (const auto& a : axes_) n *= a.size();
  return n;
}

std::vector<double> Grid::point(std::size_t k) const {
  if (k >= size()) fail(ErrorCode::kInvalidArgument, "grid point out of range");
  std::vector<double> out(axes_.size());
  for (std::size_t a = axes_.size(); a-- > 0;) {
    out[a] = axes_[a][k % axes_[a].size()];
    k /= axes_[a].size();
  }
  return out;
}

}  // namespace sipa
