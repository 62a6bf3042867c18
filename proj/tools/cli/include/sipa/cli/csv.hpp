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

#ifndef SIPA_CLI_CSV_HPP_
#define SIPA_CLI_CSV_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sipa/core/dataset.hpp"

namespace sipa::cli {

// Raw cells of a comma-separated file. line_numbers[r] is the 1-based line of
// body row r in the source file.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

// Header row required; fields may be double-quoted ("" escapes a quote);
// surrounding blanks of unquoted fields are dropped; empty lines skipped.
CsvTable parse_csv(std::string_view text, std::string_view source = "<input>");
CsvTable read_csv(const std::filesystem::path& path);

struct CsvOptions {
  std::optional<std::string> target;
  std::map<std::string, FeatureKind, std::less<>> kinds;
  // Fixed level lists (e.g. from a model schema). Implies categorical.
  std::map<std::string, std::vector<std::string>, std::less<>> levels;
};

// Columns are continuous when every entry is numeric, categorical otherwise;
// categorical levels are sorted (numerically if every entry is a number).
// A non-numeric target is encoded by level index in sorted order.
Dataset to_dataset(const CsvTable& table, const CsvOptions& options,
                   std::string_view source = "<input>");
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

}  // namespace sipa::cli

#endif  // SIPA_CLI_CSV_HPP_
