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

#include "sipa/cli/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sipa/core/error.hpp"
#include "sipa/core/format.hpp"

namespace sipa::cli {

namespace {

[[noreturn]] void parse_error(std::string_view source, std::size_t line,
                              std::size_t column, const std::string& message) {
  std::string where = std::string(source) + ":" + std::to_string(line);
  if (column > 0) where += ":" + std::to_string(column);
  fail(ErrorCode::kParse, where + ": " + message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_line(std::string_view line, std::string_view source,
                                    std::size_t line_no) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t column = fields.size() + 1;
    // skip leading blanks to find a possible quote
    std::size_t start = pos;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
    if (start < line.size() && line[start] == '"') {
      std::string field;
      std::size_t k = start + 1;
      for (;;) {
        if (k >= line.size()) parse_error(source, line_no, column, "unterminated quote");
        if (line[k] == '"') {
          if (k + 1 < line.size() && line[k + 1] == '"') {
            field += '"';
            k += 2;
            continue;
          }
          ++k;
          break;
        }
        field += line[k++];
      }
      while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
      if (k < line.size() && line[k] != ',') {
        parse_error(source, line_no, column, "text after closing quote");
      }
      fields.push_back(std::move(field));
      if (k >= line.size()) break;
      pos = k + 1;
    } else {
      const std::size_t cut = line.find(',', pos);
      const std::string_view raw =
          line.substr(pos, cut == std::string_view::npos ? std::string_view::npos
                                                         : cut - pos);
      if (raw.find('"') != std::string_view::npos) {
        parse_error(source, line_no, column, "stray quote in unquoted field");
      }
      fields.emplace_back(trim(raw));
      if (cut == std::string_view::npos) break;
      pos = cut + 1;
    }
  }
  return fields;
}

bool all_numeric(const CsvTable& t, std::size_t c) {
  return std::all_of(t.rows.begin(), t.rows.end(), [c](const auto& row) {
    return parse_double(row[c]).has_value();
  });
}

std::vector<std::string> sorted_levels(const CsvTable& t, std::size_t c) {
  std::set<std::string> seen;
  for (const auto& row : t.rows) seen.insert(row[c]);
  std::vector<std::string> levels(seen.begin(), seen.end());
  if (all_numeric(t, c)) {
    std::stable_sort(levels.begin(), levels.end(),
                     [](const std::string& a, const std::string& b) {
                       return *parse_double(a) < *parse_double(b);
                     });
  }
  return levels;
}

double numeric_cell(const CsvTable& t, std::size_t r, std::size_t c,
                    std::string_view source) {
  const auto v = parse_double(t.rows[r][c]);
  if (!v) {
    parse_error(source, t.line_numbers[r], c + 1,
                "column '" + t.header[c] + "' expects a number, found '" +
                    t.rows[r][c] + "'");
  }
  if (std::isnan(*v)) {
    fail(ErrorCode::kMissingValue, std::string(source) + ":" +
                                       std::to_string(t.line_numbers[r]) + ":" +
                                       std::to_string(c + 1) + ": missing value");
  }
  return *v;
}

}  // namespace

CsvTable parse_csv(std::string_view text, std::string_view source) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;
    auto fields = split_line(line, source, line_no);
    if (!have_header) {
      std::set<std::string, std::less<>> names;
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c].empty()) parse_error(source, line_no, c + 1, "empty column name");
        if (!names.insert(fields[c]).second) {
          parse_error(source, line_no, c + 1, "duplicate column '" + fields[c] + "'");
        }
      }
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      parse_error(source, line_no, 0,
                  "row has " + std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (fields[c].empty()) {
        fail(ErrorCode::kMissingValue, std::string(source) + ":" +
                                           std::to_string(line_no) + ":" +
                                           std::to_string(c + 1) +
                                           ": empty field in column '" +
                                           table.header[c] + "'");
      }
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) parse_error(source, 1, 0, "empty file (no header row)");
  if (table.rows.empty()) parse_error(source, line_no, 0, "no data rows");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open data file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path.string());
}

Dataset to_dataset(const CsvTable& table, const CsvOptions& options,
                   std::string_view source) {
  const auto column_of = [&table](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - table.header.begin());
  };

  std::optional<std::size_t> target_col;
  if (options.target) {
    target_col = column_of(*options.target);
    if (!target_col) {
      parse_error(source, 1, 0, "unknown target column '" + *options.target + "'");
    }
  }
  for (const auto& [name, kind] : options.kinds) {
    if (!column_of(name)) parse_error(source, 1, 0, "unknown column '" + name + "'");
  }

  const std::size_t n = table.rows.size();
  std::vector<FeatureMeta> meta;
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == target_col) continue;
    const std::string& name = table.header[c];
    FeatureKind kind = all_numeric(table, c) ? FeatureKind::kContinuous
                                             : FeatureKind::kCategorical;
    const auto hint = options.levels.find(name);
    if (hint != options.levels.end()) kind = FeatureKind::kCategorical;
    if (const auto o = options.kinds.find(name); o != options.kinds.end()) {
      kind = o->second;
    }
    if (kind == FeatureKind::kContinuous) {
      meta.push_back(FeatureMeta::continuous(name));
    } else {
      meta.push_back(FeatureMeta::categorical(
          name, hint != options.levels.end() ? hint->second : sorted_levels(table, c)));
    }
    cols.push_back(c);
  }
  if (meta.empty()) parse_error(source, 1, 0, "no feature columns");

  Matrix features(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(meta.size()));
  for (std::size_t j = 0; j < meta.size(); ++j) {
    const std::size_t c = cols[j];
    for (std::size_t r = 0; r < n; ++r) {
      double v = 0.0;
      if (meta[j].is_categorical()) {
        const auto& levels = meta[j].levels;
        const auto it = std::find(levels.begin(), levels.end(), table.rows[r][c]);
        if (it == levels.end()) {
          fail(ErrorCode::kInvalidLevel,
               std::string(source) + ":" + std::to_string(table.line_numbers[r]) +
                   ":" + std::to_string(c + 1) + ": level '" + table.rows[r][c] +
                   "' is not known for feature '" + meta[j].name + "'");
        }
        v = static_cast<double>(it - levels.begin());
      } else {
        v = numeric_cell(table, r, c, source);
      }
      features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = v;
    }
  }

  std::optional<Vector> target;
  if (target_col) {
    Vector y(static_cast<Eigen::Index>(n));
    if (all_numeric(table, *target_col)) {
      for (std::size_t r = 0; r < n; ++r) {
        y(static_cast<Eigen::Index>(r)) = numeric_cell(table, r, *target_col, source);
      }
    } else {
      const auto levels = sorted_levels(table, *target_col);
      for (std::size_t r = 0; r < n; ++r) {
        const auto it = std::find(levels.begin(), levels.end(), table.rows[r][*target_col]);
        y(static_cast<Eigen::Index>(r)) = static_cast<double>(it - levels.begin());
      }
    }
    target = std::move(y);
  }
  return Dataset(std::move(features), std::move(meta), std::move(target));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  return to_dataset(read_csv(path), options, path.string());
}

}  // namespace sipa::cli
