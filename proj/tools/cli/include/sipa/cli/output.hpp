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

#ifndef SIPA_CLI_OUTPUT_HPP_
#define SIPA_CLI_OUTPUT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sipa/core/stage_trace.hpp"

namespace sipa::cli {

inline constexpr std::string_view kSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

// One result document plus its flat CSV rendering.
struct Output {
  Json document;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

Json trace_to_json(const StageTrace& trace);

// Two-space indented JSON with a trailing newline.
std::string to_json_text(const Json& document);
std::string to_csv_text(const Output& output);
// Everything except the data payload; written next to CSV output.
Json trace_sidecar(const Json& document);

// Structural check against the published output schema. Returns one message
// per violation; empty when the document conforms.
std::vector<std::string> validate_document(const nlohmann::json& document);

}  // namespace sipa::cli

#endif  // SIPA_CLI_OUTPUT_HPP_
