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

#ifndef SIPA_CLI_CONFIG_HPP_
#define SIPA_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sipa::cli {

enum class OutputFormat { kJson, kCsv };

// Everything one invocation needs. Unset optionals take the method's default.
struct RunConfig {
  std::string method;
  std::string data;
  std::string model;
  std::optional<std::string> target;
  std::map<std::string, std::string, std::less<>> kinds;  // name -> kind
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::kJson;
  std::size_t threads = 1;

  std::vector<std::string> features;
  std::optional<std::size_t> row;
  std::string grid = "observed";
  std::optional<std::size_t> intervals;
  std::optional<double> h;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> repeats;
  std::optional<std::size_t> samples;
  std::optional<double> kernel_width;
  std::string loss = "squared";
  double threshold = 0.5;
  std::optional<std::string> mode;
  std::size_t cap = 12;
  std::optional<std::size_t> sample;

  // fit only
  std::string model_kind = "linear";
  std::size_t k = 5;
};

// Canonical method name for a subcommand or alias ("shapley_exact" ->
// "shapley" with mode exact, ...). Throws kInvalidArgument for unknowns.
std::string canonical_method(std::string_view name,
                             std::optional<std::string>* mode = nullptr);

const std::vector<std::string>& method_names();

// Range and consistency checks; throws kInvalidArgument.
void validate(RunConfig& config);

// JSON config file; unknown keys and ill-typed values are usage errors.
RunConfig config_from_json(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace sipa::cli

#endif  // SIPA_CLI_CONFIG_HPP_
