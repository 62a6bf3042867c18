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

#ifndef SIPA_EFFECTS_COALITION_HPP_
#define SIPA_EFFECTS_COALITION_HPP_

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace sipa {

// Bit k set <=> feature k is in the coalition.
using Coalition = std::uint64_t;

inline constexpr std::size_t kMaxCoalitionFeatures = 30;

std::vector<std::size_t> coalition_members(Coalition c);

// |K|! (p - |K| - 1)! / p!
double shapley_weight(std::size_t p, std::size_t coalition_size);

// Exact Shapley value of `feature` for a p-player game, enumerating all
// 2^(p-1) coalitions without it in increasing bit order. Throws kCapacity
// when p exceeds `max_features`.
double shapley_value(std::size_t p, std::size_t feature,
                     const std::function<double(Coalition)>& payout,
                     std::size_t max_features);

// Memoizes a payout function over coalitions for one run.
class PayoutTable {
 public:
  explicit PayoutTable(std::function<double(Coalition)> payout)
      : payout_(std::move(payout)) {}

  double operator()(Coalition c);

 private:
  std::function<double(Coalition)> payout_;
  std::unordered_map<Coalition, double> values_;
};

}  // namespace sipa

#endif  // SIPA_EFFECTS_COALITION_HPP_
