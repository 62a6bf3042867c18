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

#include "sipa/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sipa/core/error.hpp"

namespace sipa::cli {

namespace {

[[noreturn]] void usage(const std::string& message) {
  fail(ErrorCode::kInvalidArgument, message);
}

bool one_of(std::string_view v, std::initializer_list<std::string_view> options) {
  return std::find(options.begin(), options.end(), v) != options.end();
}

template <typename T>
void at_least(const std::optional<T>& v, T bound, std::string_view name) {
  if (v && *v < bound) {
    usage("--" + std::string(name) + " must be >= " + std::to_string(bound));
  }
}

void positive(const std::optional<double>& v, std::string_view name) {
  if (v && !(std::isfinite(*v) && *v > 0.0)) {
    usage("--" + std::string(name) + " must be a positive finite number");
  }
}

}  // namespace

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = {
      "ice", "pd",  "ale", "me",  "ame", "shapley", "lime",  "pd-importance",
      "firm", "ces", "pfi", "ici", "pi",  "sfimp",   "fit"};
  return names;
}

std::string canonical_method(std::string_view name, std::optional<std::string>* mode) {
  struct Alias {
    std::string_view name, method, mode;
  };
  static constexpr Alias aliases[] = {
      {"shapley_exact", "shapley", "exact"},
      {"shapley-exact", "shapley", "exact"},
      {"shapley_mc", "shapley", "mc"},
      {"shapley-mc", "shapley", "mc"},
      {"pd_importance", "pd-importance", ""},
      {"pd_sd", "pd-importance", ""},
      {"pfi_permutation", "pfi", "permutation"},
      {"pfi-permutation", "pfi", "permutation"},
      {"pfi_exhaustive", "pfi", "exhaustive"},
      {"pfi-exhaustive", "pfi", "exhaustive"},
  };
  const auto& names = method_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    return std::string(name);
  }
  for (const auto& a : aliases) {
    if (a.name == name) {
      if (mode && !a.mode.empty()) {
        if (mode->has_value() && **mode != a.mode) {
          usage("method '" + std::string(name) + "' conflicts with mode '" +
                **mode + "'");
        }
        *mode = std::string(a.mode);
      }
      return std::string(a.method);
    }
  }
  usage("unknown method '" + std::string(name) + "'");
}

void validate(RunConfig& c) {
  if (c.method.empty()) usage("no method given");
  c.method = canonical_method(c.method, &c.mode);
  const std::string& m = c.method;

  if (c.data.empty()) usage("--data is required");
  if (m == "fit") {
    if (!c.target) usage("fit needs --target");
    if (!c.out) usage("fit needs --out for the model file");
    if (!one_of(c.model_kind, {"linear", "knn", "stump"})) {
      usage("--kind must be linear, knn or stump");
    }
    if (c.k < 1) usage("--k must be >= 1");
  } else if (c.model.empty()) {
    usage("--model is required");
  }
  for (const auto& [name, kind] : c.kinds) {
    if (!one_of(kind, {"continuous", "categorical"})) {
      usage("column kind for '" + name + "' must be continuous or categorical");
    }
  }
  if (c.threads < 1 || c.threads > 1024) usage("--threads must be in [1, 1024]");

  if (c.grid != "observed") {
    constexpr std::string_view prefix = "equidistant:";
    bool ok = c.grid.starts_with(prefix) && c.grid.size() > prefix.size();
    if (ok) {
      const std::string digits = c.grid.substr(prefix.size());
      ok = std::all_of(digits.begin(), digits.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; }) &&
           digits.size() < 9 && std::stoul(digits) >= 2;
    }
    if (!ok) usage("--grid must be 'observed' or 'equidistant:<k>' with k >= 2");
  }
  at_least<std::size_t>(c.intervals, 1, "intervals");
  positive(c.h, "h");
  at_least<std::size_t>(c.iterations, 1, "iterations");
  at_least<std::size_t>(c.repeats, 1, "repeats");
  at_least<std::size_t>(c.samples, 3, "samples");
  positive(c.kernel_width, "kernel-width");
  at_least<std::size_t>(c.sample, 1, "sample");
  if (!one_of(c.loss, {"squared", "absolute", "zero_one"})) {
    usage("--loss must be squared, absolute or zero_one");
  }
  if (!std::isfinite(c.threshold)) usage("--threshold must be finite");
  if (c.cap < 1 || c.cap > 30) usage("--cap must be in [1, 30]");

  if (c.mode) {
    const std::string& mode = *c.mode;
    const bool ok = (m == "shapley" && one_of(mode, {"exact", "mc"})) ||
                    (m == "pfi" && one_of(mode, {"permutation", "exhaustive"})) ||
                    (m == "sfimp" && one_of(mode, {"exhaustive", "permutation"}));
    if (!ok) usage("mode '" + mode + "' is not valid for method " + m);
  }
  if (m == "shapley" && c.mode.value_or("exact") == "exact" && c.iterations) {
    usage("--iterations needs --mode mc");
  }

  const bool single = one_of(m, {"ale", "me", "ame", "lime", "ici", "pi", "ces"});
  if (single && c.features.size() != 1) usage(m + " needs exactly one --feature");
  if (one_of(m, {"ice", "pd"}) && c.features.empty()) {
    usage(m + " needs at least one --feature");
  }
  if (m == "shapley" && c.mode.value_or("exact") == "mc" && c.features.empty()) {
    usage("shapley --mode mc needs --feature");
  }
  std::set<std::string_view> seen;
  for (const auto& f : c.features) {
    if (!seen.insert(f).second) usage("feature '" + f + "' given twice");
  }
  if (one_of(m, {"me", "lime", "ici", "shapley"}) && !c.row) {
    usage(m + " needs --row");
  }
}

namespace {

using nlohmann::json;

template <typename T>
T get_as(const json& v, std::string_view key) {
  try {
    if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
      if (!v.is_number_unsigned()) throw std::invalid_argument("");
    } else if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw std::invalid_argument("");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw std::invalid_argument("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    usage("config key '" + std::string(key) + "' has the wrong type");
  }
}

}  // namespace

RunConfig config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    usage(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) usage("config must be a JSON object");

  RunConfig c;
  for (const auto& [key, v] : doc.items()) {
    if (key == "method") c.method = get_as<std::string>(v, key);
    else if (key == "data") c.data = get_as<std::string>(v, key);
    else if (key == "model") c.model = get_as<std::string>(v, key);
    else if (key == "target") c.target = get_as<std::string>(v, key);
    else if (key == "seed") c.seed = get_as<std::uint64_t>(v, key);
    else if (key == "out") c.out = get_as<std::string>(v, key);
    else if (key == "format") {
      const auto f = get_as<std::string>(v, key);
      if (f == "json") c.format = OutputFormat::kJson;
      else if (f == "csv") c.format = OutputFormat::kCsv;
      else usage("format must be json or csv");
    } else if (key == "threads") c.threads = get_as<std::size_t>(v, key);
    else if (key == "features" || key == "feature") {
      if (v.is_string()) {
        c.features.push_back(v.get<std::string>());
      } else if (v.is_array()) {
        for (const auto& f : v) c.features.push_back(get_as<std::string>(f, key));
      } else {
        usage("config key '" + key + "' must be a string or list of strings");
      }
    } else if (key == "row") c.row = get_as<std::size_t>(v, key);
    else if (key == "grid") c.grid = get_as<std::string>(v, key);
    else if (key == "intervals") c.intervals = get_as<std::size_t>(v, key);
    else if (key == "h") c.h = get_as<double>(v, key);
    else if (key == "iterations") c.iterations = get_as<std::size_t>(v, key);
    else if (key == "repeats") c.repeats = get_as<std::size_t>(v, key);
    else if (key == "samples") c.samples = get_as<std::size_t>(v, key);
    else if (key == "kernel_width") c.kernel_width = get_as<double>(v, key);
    else if (key == "loss") c.loss = get_as<std::string>(v, key);
    else if (key == "threshold") c.threshold = get_as<double>(v, key);
    else if (key == "mode") c.mode = get_as<std::string>(v, key);
    else if (key == "cap") c.cap = get_as<std::size_t>(v, key);
    else if (key == "sample") c.sample = get_as<std::size_t>(v, key);
    else if (key == "kind") c.model_kind = get_as<std::string>(v, key);
    else if (key == "k") c.k = get_as<std::size_t>(v, key);
    else if (key == "kinds") {
      if (!v.is_object()) usage("config key 'kinds' must be an object");
      for (const auto& [name, kind] : v.items()) {
        c.kinds[name] = get_as<std::string>(kind, "kinds." + name);
      }
    } else {
      usage("unknown config key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  RunConfig c = config_from_json(buf.str());
  // Relative paths in a config file are relative to the file.
  const auto base = path.parent_path();
  const auto rebase = [&base](std::string& p) {
    if (!p.empty() && std::filesystem::path(p).is_relative()) p = (base / p).string();
  };
  rebase(c.data);
  rebase(c.model);
  if (c.out) rebase(*c.out);
  return c;
}

}  // namespace sipa::cli
