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

#include "sipa/effects/coalition.hpp"

#include <bit>
#include <string>

#include "sipa/core/error.hpp"

namespace sipa {

std::vector<std::size_t> coalition_members(Coalition c) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; c != 0; ++k, c >>= 1) {
    if (c & 1u) out.push_back(k);
  }
  return out;
}

double shapley_weight(std::size_t p, std::size_t coalition_size) {
  if (coalition_size >= p) {
    fail(ErrorCode::kInvalidArgument, "coalition must exclude the player");
  }
  // 1 / (p * C(p-1, |K|)); the binomial is exact in a double for p <= 30.
  const std::size_t m = p - 1;
  const std::size_t k = std::min(coalition_size, m - coalition_size);
  double binom = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    binom = binom * static_cast<double>(m - k + i) / static_cast<double>(i);
  }
  return 1.0 / (static_cast<double>(p) * binom);
}

double shapley_value(std::size_t p, std::size_t feature,
                     const std::function<double(Coalition)>& payout,
                     std::size_t max_features) {
  const std::size_t cap = std::min(max_features, kMaxCoalitionFeatures);
  if (p > cap) {
    fail(ErrorCode::kCapacity,
         "exact enumeration over " + std::to_string(p) +
             " features exceeds the cap of " + std::to_string(cap) +
             "; use the Monte Carlo estimator");
  }
  if (feature >= p) fail(ErrorCode::kInvalidArgument, "feature index out of range");
  const Coalition self = Coalition{1} << feature;
  const Coalition all = (Coalition{1} << p) - 1;
  double total = 0.0;
  for (Coalition c = 0; c <= all; ++c) {
    if (c & self) continue;
    const auto size = static_cast<std::size_t>(std::popcount(c));
    total += shapley_weight(p, size) * (payout(c | self) - payout(c));
  }
  return total;
}

double PayoutTable::operator()(Coalition c) {
  const auto it = values_.find(c);
  if (it != values_.end()) return it->second;
  const double v = payout_(c);
  values_.emplace(c, v);
  return v;
}

}  // namespace sipa
