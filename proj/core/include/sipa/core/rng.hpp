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

#ifndef SIPA_CORE_RNG_HPP_
#define SIPA_CORE_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

#include "sipa/core/matrix.hpp"

namespace sipa {

// Seeded random source used by every randomized step.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The derived draws (bounded integers, unit doubles, normals,
// shuffles) are implemented here instead of through <random> distributions,
// which are implementation-defined. Same seed, same stream, on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). Rejection sampling, so no modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();

  // Standard normal via Box-Muller; one draw per call (the sine branch is
  // discarded so the stream position does not depend on call parity).
  double normal();

  // Fisher-Yates, iterating from the back.
  void shuffle(std::span<Index> values);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sipa

#endif  // SIPA_CORE_RNG_HPP_
