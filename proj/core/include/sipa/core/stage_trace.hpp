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

#ifndef SIPA_CORE_STAGE_TRACE_HPP_
#define SIPA_CORE_STAGE_TRACE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sipa {

// The four work stages every method decomposes into, in execution order.
enum class Stage { kSampling = 0, kIntervention, kPrediction, kAggregation };

inline constexpr std::size_t kNumStages = 4;

std::string_view to_string(Stage stage) noexcept;

using ParamValue = std::variant<std::int64_t, std::uint64_t, double, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct StageRecord {
  Stage stage = Stage::kSampling;
  std::string description;
  Params params;
};

// Summary of how a result was produced, one record per stage.
//
// Methods call the primitives many times (one intervention per grid point,
// say); repeated reports for a stage fold into that stage's single record,
// so records() always comes out in sampling -> intervention -> prediction
// -> aggregation order.
class StageTrace {
 public:
  // Appends `description` to the stage record unless already present; params
  // with an existing key overwrite it.
  void record(Stage stage, std::string_view description, Params params = {});
  // Adds `delta` to an integer counter param of the stage record.
  void tally(Stage stage, std::string_view key, std::int64_t delta);
  // Folds every record of `other` into this trace.
  void absorb(const StageTrace& other);

  std::vector<StageRecord> records() const;
  bool has(Stage stage) const noexcept;
  std::optional<ParamValue> param(Stage stage, std::string_view key) const;

 private:
  StageRecord& slot(Stage stage);

  std::array<std::optional<StageRecord>, kNumStages> slots_;
};

}  // namespace sipa

#endif  // SIPA_CORE_STAGE_TRACE_HPP_
