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

#include "sipa/core/loss.hpp"

#include <cmath>
#include <string>

#include "sipa/core/error.hpp"

namespace sipa {

LossFunction LossFunction::zero_one(double threshold) {
  if (!std::isfinite(threshold)) {
    fail(ErrorCode::kInvalidArgument, "zero-one threshold must be finite");
  }
  return LossFunction(LossKind::kZeroOne, threshold);
}

LossFunction LossFunction::parse(std::string_view tag, double threshold) {
  if (tag == "squared") return squared();
  if (tag == "absolute") return absolute();
  if (tag == "zero_one") return zero_one(threshold);
  fail(ErrorCode::kInvalidArgument,
       "unknown loss '" + std::string(tag) + "' (squared, absolute, zero_one)");
}

std::string_view LossFunction::tag() const noexcept {
  switch (kind_) {
    case LossKind::kSquared:
      return "squared";
    case LossKind::kAbsolute:
      return "absolute";
    case LossKind::kZeroOne:
      return "zero_one";
  }
  return "unknown";
}

double LossFunction::operator()(double prediction, double target) const noexcept {
  switch (kind_) {
    case LossKind::kSquared: {
      const double d = prediction - target;
      return d * d;
    }
    case LossKind::kAbsolute:
      return std::fabs(prediction - target);
    case LossKind::kZeroOne:
      return (prediction >= threshold_) == (target >= threshold_) ? 0.0 : 1.0;
  }
  return 0.0;
}

}  // namespace sipa
