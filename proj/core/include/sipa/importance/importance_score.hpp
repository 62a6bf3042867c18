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

#ifndef SIPA_IMPORTANCE_IMPORTANCE_SCORE_HPP_
#define SIPA_IMPORTANCE_IMPORTANCE_SCORE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sipa/core/stage_trace.hpp"

namespace sipa {

enum class ImportanceMethod {
  kPdSd,
  kFirm,
  kPfiPermutation,
  kPfiExhaustive,
  kSfimp,
};

std::string_view to_string(ImportanceMethod method) noexcept;

struct ImportanceScore {
  ImportanceMethod method = ImportanceMethod::kPdSd;
  std::size_t feature = 0;
  double value = 0.0;
  std::optional<std::string> loss;  // performance-based methods
  std::vector<std::uint64_t> seeds;
  std::size_t repeats = 0;
  std::vector<double> replicates;  // per-repeat values (pfi_permutation)
  std::optional<double> full_payout;  // v(P), sfimp only
  StageTrace trace;
};

}  // namespace sipa

#endif  // SIPA_IMPORTANCE_IMPORTANCE_SCORE_HPP_
