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

#ifndef SIPA_CLI_RUN_HPP_
#define SIPA_CLI_RUN_HPP_

#include <iosfwd>

#include "sipa/cli/config.hpp"
#include "sipa/cli/output.hpp"
#include "sipa/core/dataset.hpp"
#include "sipa/core/error.hpp"
#include "sipa/refmodels/reference_model.hpp"

namespace sipa::cli {

// 0 ok, 1 usage, 2 data, 3 numeric or capacity.
int exit_code(ErrorCode code) noexcept;

// Reads `config.data` so that its columns line up with the model schema:
// same feature names (any order, target excluded), model kinds and levels.
Dataset load_for_model(const RunConfig& config, const refmodels::ReferenceModel& model);

// Runs one method on a validated config and returns the result document.
Output execute(const RunConfig& config);

// Validates, executes, writes the output. Errors go to `err`.
int run(RunConfig config, std::ostream& out, std::ostream& err);

// Command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sipa::cli

#endif  // SIPA_CLI_RUN_HPP_
