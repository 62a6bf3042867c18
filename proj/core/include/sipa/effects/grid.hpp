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

#ifndef SIPA_EFFECTS_GRID_HPP_
#define SIPA_EFFECTS_GRID_HPP_

#include <span>
#include <vector>

#include "sipa/core/dataset.hpp"

namespace sipa {

enum class GridSource { kObserved, kEquidistant, kCustom };

// Evaluation points for one feature or a Cartesian product over a set S.
//
// A point is a tuple with one value per feature of S; for categorical
// features values are level codes. Point k enumerates the product with the
// last axis varying fastest.
class Grid {
 public:
  // Sorted unique observed values (continuous) or all levels (categorical).
  static Grid observed(const Dataset& data, std::size_t feature);
  // k >= 2 equally spaced values spanning the observed range (k = 1 gives
  // the midpoint). Continuous features only.
  static Grid equidistant(const Dataset& data, std::size_t feature,
                          std::size_t k);
  // Caller-chosen values: strictly increasing for continuous features,
  // distinct valid level codes for categorical ones.
  static Grid custom(const Dataset& data, std::size_t feature,
                     std::vector<double> values);
  // Product of single-feature grids over distinct features.
  static Grid cartesian(std::span<const Grid> axes);

  std::span<const std::size_t> features() const noexcept { return features_; }
  std::size_t dimension() const noexcept { return features_.size(); }
  const std::vector<double>& axis(std::size_t a) const { return axes_.at(a); }
  GridSource source() const noexcept { return source_; }

  std::size_t size() const noexcept;
  std::vector<double> point(std::size_t k) const;

 private:
  Grid(std::vector<std::size_t> features, std::vector<std::vector<double>> axes,
       GridSource source);

  std::vector<std::size_t> features_;
  std::vector<std::vector<double>> axes_;
  GridSource source_;
};

}  // namespace sipa

#endif  // SIPA_EFFECTS_GRID_HPP_
