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

#ifndef SIPA_CORE_MATRIX_HPP_
#define SIPA_CORE_MATRIX_HPP_

#include <cstddef>

#include <Eigen/Core>

namespace sipa {

// Row-major so that one observation is one contiguous row; predictors and
// the prediction cache both rely on that layout.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

using Index = std::size_t;

}  // namespace sipa

#endif  // SIPA_CORE_MATRIX_HPP_
