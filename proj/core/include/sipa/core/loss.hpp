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

#ifndef SIPA_CORE_LOSS_HPP_
#define SIPA_CORE_LOSS_HPP_

#include <string_view>

namespace sipa {

enum class LossKind { kSquared, kAbsolute, kZeroOne };

// Pointwise loss L(prediction, target) >= 0.
//
// Zero-one loss thresholds both sides: a value v is class 1 when
// v >= threshold, so 0/1-coded targets and probability-like predictions
// compare as labels.
class LossFunction {
 public:
  static LossFunction squared() { return LossFunction(LossKind::kSquared, 0.5); }
  static LossFunction absolute() {
    return LossFunction(LossKind::kAbsolute, 0.5);
  }
  static LossFunction zero_one(double threshold = 0.5);
  // "squared" | "absolute" | "zero_one"; throws kInvalidArgument otherwise.
  static LossFunction parse(std::string_view tag, double threshold = 0.5);

  LossKind kind() const noexcept { return kind_; }
  double threshold() const noexcept { return threshold_; }
  std::string_view tag() const noexcept;

  double operator()(double prediction, double target) const noexcept;

 private:
  LossFunction(LossKind kind, double threshold)
      : kind_(kind), threshold_(threshold) {}

  LossKind kind_;
  double threshold_;
};

}  // namespace sipa

#endif  // SIPA_CORE_LOSS_HPP_
