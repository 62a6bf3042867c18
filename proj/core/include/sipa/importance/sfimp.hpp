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

#ifndef SIPA_IMPORTANCE_SFIMP_HPP_
#define SIPA_IMPORTANCE_SFIMP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sipa/core/dataset.hpp"
#include "sipa/core/loss.hpp"
#include "sipa/core/predictor.hpp"
#include "sipa/importance/importance_score.hpp"

namespace sipa {

// How features outside a coalition are perturbed when evaluating its payout.
enum class PerturbationMode {
  // Every (i, l) pair: observation i takes the out-of-coalition features of
  // observation l jointly; losses are averaged over l, then i. Seed-free.
  kExhaustive,
  // One seeded row permutation, applied jointly to the out-of-coalition
  // features. The same permutation is used for every coalition of a run.
  kPermutation,
};

struct SfimpOptions {
  PerturbationMode mode = PerturbationMode::kExhaustive;
  std::uint64_t seed = 0;  // permutation mode only
  std::size_t max_features = 12;
};

// Performance payout of a coalition K:
//   v(K) = GE(features outside K perturbed) - GE(all features perturbed).
// v(empty) = 0 exactly. With this sign convention, a coalition that carries
// predictive information has a negative payout (its loss is lower than the
// fully perturbed loss).
double pfi_payout(const PredictorHandle& predictor, const Dataset& data,
                  std::span<const std::size_t> coalition,
                  const LossFunction& loss, const SfimpOptions& options = {});

// Shapley value of each feature under pfi_payout, by the same weighted
// coalition formula as shapley_exact. Payouts are shared across features and
// v(P) is reported in full_payout. Throws kCapacity above max_features.
std::vector<ImportanceScore> sfimp_all(const PredictorHandle& predictor,
                                       const Dataset& data,
                                       const LossFunction& loss,
                                       const SfimpOptions& options = {});
ImportanceScore sfimp(const PredictorHandle& predictor, const Dataset& data,
                      std::size_t feature, const LossFunction& loss,
                      const SfimpOptions& options = {});

}  // namespace sipa

#endif  // SIPA_IMPORTANCE_SFIMP_HPP_
