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

#include "sipa/core/stage_trace.hpp"

#include <algorithm>

namespace sipa {

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::kSampling:
      return "sampling";
    case Stage::kIntervention:
      return "intervention";
    case Stage::kPrediction:
      return "prediction";
    case Stage::kAggregation:
      return "aggregation";
  }
  return "unknown";
}

namespace {

ParamValue* find_param(Params& params, std::string_view key) {
  for (auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

StageRecord& StageTrace::slot(Stage stage) {
  auto& s = slots_[static_cast<std::size_t>(stage)];
  if (!s) s = StageRecord{stage, {}, {}};
  return *s;
}

void StageTrace::record(Stage stage, std::string_view description,
                        Params params) {
  auto& rec = slot(stage);
  // Entries are "; "-separated; add the ones not yet present.
  std::string_view incoming = description;
  while (!incoming.empty()) {
    const auto cut = incoming.find("; ");
    const std::string_view entry = incoming.substr(0, cut);
    incoming = cut == std::string_view::npos ? std::string_view{}
                                             : incoming.substr(cut + 2);
    if (entry.empty()) continue;
    bool present = false;
    std::string_view rest = rec.description;
    while (!rest.empty()) {
      const auto c = rest.find("; ");
      if (rest.substr(0, c) == entry) {
        present = true;
        break;
      }
      if (c == std::string_view::npos) break;
      rest.remove_prefix(c + 2);
    }
    if (!present) {
      if (!rec.description.empty()) rec.description += "; ";
      rec.description += entry;
    }
  }
  for (auto& [key, value] : params) {
    if (auto* existing = find_param(rec.params, key)) {
      *existing = std::move(value);
    } else {
      rec.params.emplace_back(std::move(key), std::move(value));
    }
  }
}

void StageTrace::tally(Stage stage, std::string_view key, std::int64_t delta) {
  auto& rec = slot(stage);
  if (auto* existing = find_param(rec.params, key)) {
    if (auto* count = std::get_if<std::int64_t>(existing)) {
      *count += delta;
      return;
    }
    *existing = delta;
    return;
  }
  rec.params.emplace_back(std::string(key), delta);
}

void StageTrace::absorb(const StageTrace& other) {
  for (const auto& s : other.slots_) {
    if (!s) continue;
    record(s->stage, s->description, s->params);
  }
}

std::vector<StageRecord> StageTrace::records() const {
  std::vector<StageRecord> out;
  for (const auto& s : slots_) {
    if (s) out.push_back(*s);
  }
  return out;
}

bool StageTrace::has(Stage stage) const noexcept {
  return slots_[static_cast<std::size_t>(stage)].has_value();
}

std::optional<ParamValue> StageTrace::param(Stage stage,
                                            std::string_view key) const {
  const auto& s = slots_[static_cast<std::size_t>(stage)];
  if (!s) return std::nullopt;
  for (const auto& [k, v] : s->params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

}  // namespace sipa
