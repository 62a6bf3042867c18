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

#include "sipa/cli/output.hpp"

#include <algorithm>
#include <array>
#include <variant>

namespace sipa::cli {

Json trace_to_json(const StageTrace& trace) {
  Json out = Json::array();
  for (const auto& r : trace.records()) {
    Json params = Json::object();
    for (const auto& [key, value] : r.params) {
      std::visit([&](const auto& v) { params[key] = v; }, value);
    }
    out.push_back(Json{{"stage", std::string(to_string(r.stage))},
                       {"description", r.description},
                       {"params", std::move(params)}});
  }
  return out;
}

std::string to_json_text(const Json& document) { return document.dump(2) + "\n"; }

std::string to_csv_text(const Output& output) {
  std::string text;
  const auto line = [&text](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) text += ',';
      const std::string& cell = cells[c];
      if (cell.find_first_of(",\"\n") == std::string::npos) {
        text += cell;
      } else {
        text += '"';
        for (char ch : cell) {
          if (ch == '"') text += '"';
          text += ch;
        }
        text += '"';
      }
    }
    text += '\n';
  };
  line(output.csv_header);
  for (const auto& row : output.csv_rows) line(row);
  return text;
}

Json trace_sidecar(const Json& document) {
  Json out = Json::object();
  for (const auto& [key, value] : document.items()) {
    if (key == "points" || key == "curves" || key == "score" || key == "scores") continue;
    out[key] = value;
  }
  return out;
}

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kStages = {"sampling", "intervention",
                                                     "prediction", "aggregation"};
constexpr std::array<std::string_view, 14> kMethods = {
    "ice", "pd",   "ale", "me",  "ame", "shapley", "lime", "pd-importance",
    "firm", "ces", "pfi", "ici", "pi",  "sfimp"};

class Checker {
 public:
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& where, std::string_view what) {
    if (!ok) problems.push_back(where + ": " + std::string(what));
  }

  void only_keys(const json& obj, const std::string& where,
                 std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, v] : obj.items()) {
      expect(std::find(allowed.begin(), allowed.end(), key) != allowed.end(), where,
             "unexpected key '" + key + "'");
    }
  }

  static bool is_coordinate(const json& v) { return v.is_number() || v.is_string(); }

  void points(const json& pts, const std::string& where) {
    if (!pts.is_array()) {
      expect(false, where, "must be an array");
      return;
    }
    expect(!pts.empty(), where, "must not be empty");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const json& p = pts[k];
      if (!p.is_object()) {
        expect(false, at, "must be an object");
        continue;
      }
      only_keys(p, at, {"x", "y"});
      expect(p.contains("x"), at, "missing 'x'");
      expect(p.contains("y") && p["y"].is_number(), at, "'y' must be a number");
      if (p.contains("x")) {
        const json& x = p["x"];
        bool ok = is_coordinate(x);
        if (x.is_array()) {
          ok = !x.empty() && std::all_of(x.begin(), x.end(), is_coordinate);
        }
        expect(ok, at, "'x' must be a number, a level or a list of those");
      }
    }
  }
};

}  // namespace

std::vector<std::string> validate_document(const json& doc) {
  Checker c;
  if (!doc.is_object()) return {"document must be a JSON object"};
  c.only_keys(doc, "document",
              {"schema_version", "method", "feature", "params", "seed", "stage_trace",
               "points", "curves", "score", "scores", "details"});
  for (std::string_view key :
       {"schema_version", "method", "feature", "params", "seed", "stage_trace"}) {
    c.expect(doc.contains(key), "document", "missing '" + std::string(key) + "'");
  }
  if (!c.problems.empty()) return c.problems;

  c.expect(doc["schema_version"] == kSchemaVersion, "schema_version",
           "must be \"" + std::string(kSchemaVersion) + "\"");
  const json& method = doc["method"];
  c.expect(method.is_string() &&
               std::find(kMethods.begin(), kMethods.end(),
                         method.get_ref<const std::string&>()) != kMethods.end(),
           "method", "unknown method");
  const json& feature = doc["feature"];
  bool feature_ok = feature.is_null() || feature.is_string();
  if (feature.is_array()) {
    feature_ok = !feature.empty() && std::all_of(feature.begin(), feature.end(),
                                                 [](const json& f) { return f.is_string(); });
  }
  c.expect(feature_ok, "feature", "must be null, a name or a list of names");
  c.expect(doc["params"].is_object(), "params", "must be an object");
  c.expect(doc["seed"].is_null() || doc["seed"].is_number_unsigned(), "seed",
           "must be null or a non-negative integer");
  if (doc.contains("details")) {
    c.expect(doc["details"].is_object(), "details", "must be an object");
  }

  const json& trace = doc["stage_trace"];
  if (!trace.is_array()) {
    c.expect(false, "stage_trace", "must be an array");
  } else {
    int last = -1;
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const std::string at = "stage_trace[" + std::to_string(k) + "]";
      const json& r = trace[k];
      if (!r.is_object()) {
        c.expect(false, at, "must be an object");
        continue;
      }
      c.only_keys(r, at, {"stage", "description", "params"});
      c.expect(r.contains("description") && r["description"].is_string(), at,
               "'description' must be a string");
      c.expect(r.contains("params") && r["params"].is_object(), at,
               "'params' must be an object");
      if (r.contains("params") && r["params"].is_object()) {
        for (const auto& [key, v] : r["params"].items()) {
          c.expect(v.is_number() || v.is_string(), at + ".params." + key,
                   "must be a number or a string");
        }
      }
      const auto it = r.contains("stage") && r["stage"].is_string()
                          ? std::find(kStages.begin(), kStages.end(),
                                      r["stage"].get_ref<const std::string&>())
                          : kStages.end();
      if (it == kStages.end()) {
        c.expect(false, at, "unknown stage");
        continue;
      }
      const int index = static_cast<int>(it - kStages.begin());
      c.expect(index > last, at, "stages out of order");
      last = index;
    }
  }

  int payloads = 0;
  if (doc.contains("points")) {
    ++payloads;
    c.points(doc["points"], "points");
  }
  if (doc.contains("curves")) {
    ++payloads;
    const json& curves = doc["curves"];
    if (!curves.is_array() || curves.empty()) {
      c.expect(false, "curves", "must be a non-empty array");
    } else {
      for (std::size_t k = 0; k < curves.size(); ++k) {
        const std::string at = "curves[" + std::to_string(k) + "]";
        const json& cv = curves[k];
        if (!cv.is_object()) {
          c.expect(false, at, "must be an object");
          continue;
        }
        c.only_keys(cv, at, {"observation", "points"});
        c.expect(cv.contains("observation") && cv["observation"].is_number_unsigned(),
                 at, "'observation' must be a non-negative integer");
        if (cv.contains("points")) {
          c.points(cv["points"], at + ".points");
        } else {
          c.expect(false, at, "missing 'points'");
        }
      }
    }
  }
  if (doc.contains("score")) {
    ++payloads;
    c.expect(doc["score"].is_number(), "score", "must be a number");
  }
  if (doc.contains("scores")) {
    ++payloads;
    const json& scores = doc["scores"];
    if (!scores.is_array() || scores.empty()) {
      c.expect(false, "scores", "must be a non-empty array");
    } else {
      for (std::size_t k = 0; k < scores.size(); ++k) {
        const std::string at = "scores[" + std::to_string(k) + "]";
        const json& s = scores[k];
        if (!s.is_object()) {
          c.expect(false, at, "must be an object");
          continue;
        }
        c.only_keys(s, at, {"feature", "score", "standard_error"});
        c.expect(s.contains("feature") && s["feature"].is_string(), at,
                 "'feature' must be a string");
        c.expect(s.contains("score") && s["score"].is_number(), at,
                 "'score' must be a number");
        if (s.contains("standard_error")) {
          c.expect(s["standard_error"].is_number(), at,
                   "'standard_error' must be a number");
        }
      }
    }
  }
  c.expect(payloads == 1, "document",
           "needs exactly one of 'points', 'curves', 'score', 'scores'");
  return c.problems;
}

}  // namespace sipa::cli
