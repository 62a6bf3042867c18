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

#include "sipa/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "sipa/cli/csv.hpp"
#include "sipa/core/format.hpp"
#include "sipa/core/stages.hpp"
#include "sipa/effects/ale.hpp"
#include "sipa/effects/grid.hpp"
#include "sipa/effects/lime.hpp"
#include "sipa/effects/marginal.hpp"
#include "sipa/effects/partial_dependence.hpp"
#include "sipa/effects/shapley.hpp"
#include "sipa/importance/permutation_importance.hpp"
#include "sipa/importance/sfimp.hpp"
#include "sipa/importance/variance_importance.hpp"

namespace sipa::cli {

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return 1;
    case ErrorCode::kParse:
    case ErrorCode::kIo:
    case ErrorCode::kInvalidLevel:
    case ErrorCode::kUnsupportedKind:
    case ErrorCode::kShape:
    case ErrorCode::kMissingTarget:
    case ErrorCode::kMissingValue:
      return 2;
    case ErrorCode::kDegenerateBinning:
    case ErrorCode::kCapacity:
    case ErrorCode::kSingularFit:
    case ErrorCode::kUndefinedVariance:
      return 3;
  }
  return 3;
}

Dataset load_for_model(const RunConfig& config, const refmodels::ReferenceModel& model) {
  const CsvTable raw = read_csv(config.data);
  const auto& schema = model.schema();

  std::set<std::string, std::less<>> wanted;
  for (const auto& m : schema) wanted.insert(m.name);
  for (const auto& name : raw.header) {
    if (config.target && name == *config.target) continue;
    if (!wanted.contains(name)) {
      fail(ErrorCode::kShape, "column '" + name + "' of " + config.data +
                                  " is not a model feature (missing --target?)");
    }
  }

  CsvOptions options;
  options.target = config.target;
  for (const auto& m : schema) {
    if (const auto k = config.kinds.find(m.name); k != config.kinds.end() &&
                                                  k->second != to_string(m.kind)) {
      fail(ErrorCode::kShape, "column kind override for '" + m.name +
                                  "' disagrees with the model (" +
                                  std::string(to_string(m.kind)) + ")");
    }
    if (m.is_categorical()) {
      options.levels[m.name] = m.levels;
    } else {
      options.kinds[m.name] = FeatureKind::kContinuous;
    }
  }
  const Dataset loaded = to_dataset(raw, options, config.data);

  // Columns in model order.
  Matrix features(static_cast<Eigen::Index>(loaded.num_rows()),
                  static_cast<Eigen::Index>(schema.size()));
  std::vector<FeatureMeta> meta;
  for (std::size_t k = 0; k < schema.size(); ++k) {
    const auto j = loaded.find_feature(schema[k].name);
    if (!j) {
      fail(ErrorCode::kShape, "data file " + config.data + " has no column '" +
                                  schema[k].name + "' required by the model");
    }
    features.col(static_cast<Eigen::Index>(k)) =
        loaded.features().col(static_cast<Eigen::Index>(*j));
    FeatureMeta m = loaded.meta(*j);
    m.observed_range.reset();
    meta.push_back(std::move(m));
  }
  std::optional<Vector> target;
  if (loaded.has_target()) target = loaded.target();
  return Dataset(std::move(features), std::move(meta), std::move(target));
}

namespace {

std::string fmt(double v) { return format_double(v); }

struct Context {
  const RunConfig& config;
  Dataset data;
  PredictorHandle predictor;
  StageTrace trace;  // sampling of the input, if any
  std::uint64_t seed;
};

std::size_t feature_index(const Dataset& data, const std::string& name) {
  const auto j = data.find_feature(name);
  if (!j) fail(ErrorCode::kInvalidArgument, "unknown feature '" + name + "'");
  return *j;
}

std::vector<std::size_t> selected_features(const Context& ctx) {
  std::vector<std::size_t> out;
  if (ctx.config.features.empty()) {
    for (std::size_t j = 0; j < ctx.data.num_features(); ++j) out.push_back(j);
  } else {
    for (const auto& f : ctx.config.features) out.push_back(feature_index(ctx.data, f));
  }
  return out;
}

Json feature_field(const Dataset& data, const std::vector<std::size_t>& features) {
  if (features.size() == 1) return data.meta(features[0]).name;
  Json out = Json::array();
  for (std::size_t j : features) out.push_back(data.meta(j).name);
  return out;
}

Json coordinate(const Dataset& data, std::size_t j, double v) {
  const auto& m = data.meta(j);
  if (m.is_categorical()) return m.decode(v);
  return v;
}

std::string coordinate_text(const Dataset& data, std::size_t j, double v) {
  const auto& m = data.meta(j);
  return m.is_categorical() ? m.decode(v) : fmt(v);
}

Json points_json(const Dataset& data, const EffectCurve& curve) {
  Json pts = Json::array();
  for (const auto& p : curve.points) {
    Json x;
    if (p.x.size() == 1) {
      x = coordinate(data, curve.features[0], p.x[0]);
    } else {
      x = Json::array();
      for (std::size_t a = 0; a < p.x.size(); ++a) {
        x.push_back(coordinate(data, curve.features[a], p.x[a]));
      }
    }
    pts.push_back(Json{{"x", std::move(x)}, {"y", p.y}});
  }
  return pts;
}

void curve_rows(const Dataset& data, const EffectCurve& curve, Output& out,
                std::optional<std::size_t> observation) {
  for (const auto& p : curve.points) {
    std::vector<std::string> row;
    if (observation) row.push_back(std::to_string(*observation));
    for (std::size_t a = 0; a < p.x.size(); ++a) {
      row.push_back(coordinate_text(data, curve.features[a], p.x[a]));
    }
    row.push_back(fmt(p.y));
    out.csv_rows.push_back(std::move(row));
  }
}

std::vector<std::string> curve_header(const Dataset& data,
                                      const std::vector<std::size_t>& features,
                                      bool with_observation) {
  std::vector<std::string> h;
  if (with_observation) h.push_back("observation");
  for (std::size_t j : features) h.push_back(data.meta(j).name);
  h.push_back("y");
  return h;
}

Output begin(const Context& ctx, const std::vector<std::size_t>& features,
             bool seeded) {
  Output out;
  out.document["schema_version"] = kSchemaVersion;
  out.document["method"] = ctx.config.method;
  out.document["feature"] = feature_field(ctx.data, features);
  out.document["params"] = Json::object();
  const bool uses_seed = seeded || ctx.config.sample.has_value();
  out.document["seed"] = uses_seed ? Json(ctx.seed) : Json(nullptr);
  out.document["stage_trace"] = Json::array();
  return out;
}

void finish_trace(const Context& ctx, Output& out, const StageTrace& method_trace) {
  StageTrace t = ctx.trace;
  t.absorb(method_trace);
  out.document["stage_trace"] = trace_to_json(t);
}

Grid make_grid(const Context& ctx, const std::vector<std::size_t>& features) {
  std::vector<Grid> axes;
  for (std::size_t j : features) {
    if (ctx.config.grid == "observed" || ctx.data.meta(j).is_categorical()) {
      axes.push_back(Grid::observed(ctx.data, j));
    } else {
      const auto k = std::stoul(ctx.config.grid.substr(ctx.config.grid.find(':') + 1));
      axes.push_back(Grid::equidistant(ctx.data, j, k));
    }
  }
  return axes.size() == 1 ? axes[0] : Grid::cartesian(axes);
}

LossFunction make_loss(const RunConfig& c) {
  return LossFunction::parse(c.loss, c.threshold);
}

void loss_params(const RunConfig& c, Json& params) {
  params["loss"] = c.loss;
  if (c.loss == "zero_one") params["threshold"] = c.threshold;
}

void scores_output(const Context& ctx, Output& out,
                   const std::vector<ImportanceScore>& scores) {
  Json list = Json::array();
  StageTrace t;
  out.csv_header = {"feature", "score"};
  for (const auto& s : scores) {
    const std::string& name = ctx.data.meta(s.feature).name;
    list.push_back(Json{{"feature", name}, {"score", s.value}});
    out.csv_rows.push_back({name, fmt(s.value)});
    t.absorb(s.trace);
  }
  out.document["scores"] = std::move(list);
  finish_trace(ctx, out, t);
}

Output run_ice(const Context& ctx) {
  const auto features = selected_features(ctx);
  const Grid grid = make_grid(ctx, features);
  Output out = begin(ctx, features, false);
  out.document["params"] = {{"grid", ctx.config.grid},
                            {"grid_size", grid.size()}};
  auto curves = ice_curves(ctx.predictor, ctx.data, grid);
  if (ctx.config.row) {
    ctx.data.check_row(*ctx.config.row);
    out.document["params"]["row"] = *ctx.config.row;
    curves = {curves[*ctx.config.row]};
  }
  Json list = Json::array();
  out.csv_header = curve_header(ctx.data, features, true);
  for (const auto& c : curves) {
    list.push_back(Json{{"observation", *c.observation},
                        {"points", points_json(ctx.data, c)}});
    curve_rows(ctx.data, c, out, c.observation);
  }
  out.document["curves"] = std::move(list);
  finish_trace(ctx, out, curves.front().trace);
  return out;
}

Output curve_output(const Context& ctx, const std::vector<std::size_t>& features,
                    const EffectCurve& curve, Json params, bool seeded = false) {
  Output out = begin(ctx, features, seeded);
  out.document["params"] = std::move(params);
  out.document["points"] = points_json(ctx.data, curve);
  out.csv_header = curve_header(ctx.data, features, false);
  curve_rows(ctx.data, curve, out, std::nullopt);
  finish_trace(ctx, out, curve.trace);
  return out;
}

Output run_pd(const Context& ctx) {
  const auto features = selected_features(ctx);
  const Grid grid = make_grid(ctx, features);
  return curve_output(ctx, features, pd_curve(ctx.predictor, ctx.data, grid),
                      {{"grid", ctx.config.grid}, {"grid_size", grid.size()}});
}

Output run_ces(const Context& ctx) {
  const auto features = selected_features(ctx);
  return curve_output(ctx, features, ces_curve(ctx.predictor, ctx.data, features[0]),
                      {{"grid", "observed"}});
}

Output run_ale(const Context& ctx) {
  const auto features = selected_features(ctx);
  const std::size_t k = ctx.config.intervals.value_or(10);
  const EffectCurve curve = ale_first_order(ctx.predictor, ctx.data, features[0], k);
  return curve_output(ctx, features, curve,
                      {{"intervals", k}, {"boundaries", curve.points.size()}});
}

Output single_score(const Context& ctx, const std::vector<std::size_t>& features,
                    double value, Json params, const StageTrace& trace,
                    bool seeded = false) {
  Output out = begin(ctx, features, seeded);
  out.document["params"] = std::move(params);
  out.document["score"] = value;
  out.csv_header = {"feature", "score"};
  out.csv_rows.push_back({ctx.data.meta(features[0]).name, fmt(value)});
  finish_trace(ctx, out, trace);
  return out;
}

Output run_me(const Context& ctx) {
  const auto features = selected_features(ctx);
  const std::size_t row = *ctx.config.row;
  ctx.data.check_row(row);
  const auto x = ctx.data.row(row);
  const auto me = marginal_effect(ctx.predictor, ctx.data.meta(), x, features[0],
                                  ctx.config.h);
  return single_score(ctx, features, me.value, {{"row", row}, {"h", me.step}}, me.trace);
}

Output run_ame(const Context& ctx) {
  const auto features = selected_features(ctx);
  const auto ame =
      average_marginal_effect(ctx.predictor, ctx.data, features[0], ctx.config.h);
  return single_score(ctx, features, ame.value, {{"h", ame.step}}, ame.trace);
}

Output run_shapley(const Context& ctx) {
  const auto features = selected_features(ctx);
  const std::size_t row = *ctx.config.row;
  ctx.data.check_row(row);
  const auto x = ctx.data.row(row);
  const bool mc = ctx.config.mode.value_or("exact") == "mc";

  Output out = begin(ctx, features, mc);
  Json scores = Json::array();
  out.csv_header = {"feature", "score"};
  StageTrace t;
  double full = 0.0;
  if (mc) {
    const std::size_t m = ctx.config.iterations.value_or(1000);
    out.document["params"] = {{"mode", "mc"}, {"row", row}, {"iterations", m}};
    out.csv_header.push_back("standard_error");
    for (std::size_t j : features) {
      const auto e = shapley_mc(ctx.predictor, ctx.data, x, j, m, ctx.seed);
      const std::string& name = ctx.data.meta(j).name;
      scores.push_back(Json{{"feature", name},
                            {"score", e.values[0]},
                            {"standard_error", e.standard_errors[0]}});
      out.csv_rows.push_back({name, fmt(e.values[0]), fmt(e.standard_errors[0])});
      full = e.full_payout;
      t.absorb(e.trace);
    }
  } else {
    out.document["params"] = {{"mode", "exact"}, {"row", row}, {"cap", ctx.config.cap}};
    ShapleyOptions options;
    options.max_features = ctx.config.cap;
    const auto e = shapley_exact(ctx.predictor, ctx.data, x, std::nullopt, options);
    for (std::size_t j : features) {
      const std::string& name = ctx.data.meta(j).name;
      scores.push_back(Json{{"feature", name}, {"score", e.value(j)}});
      out.csv_rows.push_back({name, fmt(e.value(j))});
    }
    full = e.full_payout;
    t = e.trace;
  }
  out.document["scores"] = std::move(scores);
  out.document["details"] = {{"full_payout", full}};
  finish_trace(ctx, out, t);
  return out;
}

Output run_lime(const Context& ctx) {
  const auto features = selected_features(ctx);
  const std::size_t row = *ctx.config.row;
  ctx.data.check_row(row);
  const auto x = ctx.data.row(row);
  LimeOptions options;
  options.num_samples = ctx.config.samples.value_or(options.num_samples);
  options.kernel_width = ctx.config.kernel_width;
  const auto e = lime_explain(ctx.predictor, ctx.data, x, features[0], options, ctx.seed);
  Output out = single_score(ctx, features, e.slope,
                            {{"row", row},
                             {"samples", e.num_samples},
                             {"kernel_width", e.kernel_width}},
                            e.trace, true);
  out.document["details"] = {{"intercept", e.intercept},
                             {"slope", e.slope},
                             {"perturbation_sd", e.perturbation_sd}};
  out.csv_header = {"feature", "score", "intercept"};
  out.csv_rows.back().push_back(fmt(e.intercept));
  return out;
}

Output run_variance(const Context& ctx, bool use_firm) {
  const auto features = selected_features(ctx);
  Output out = begin(ctx, features, false);
  out.document["params"] = {{"grid", "observed"}};
  std::vector<ImportanceScore> scores;
  for (std::size_t j : features) {
    scores.push_back(use_firm ? firm(ctx.predictor, ctx.data, j)
                              : pd_importance(ctx.predictor, ctx.data, j));
  }
  scores_output(ctx, out, scores);
  return out;
}

Output run_pfi(const Context& ctx) {
  const auto features = selected_features(ctx);
  const bool exhaustive = ctx.config.mode.value_or("permutation") == "exhaustive";
  const LossFunction loss = make_loss(ctx.config);
  Output out = begin(ctx, features, !exhaustive);
  Json params = {{"mode", exhaustive ? "exhaustive" : "permutation"}};
  loss_params(ctx.config, params);
  std::vector<ImportanceScore> scores;
  Json replicates = Json::object();
  const std::size_t repeats = ctx.config.repeats.value_or(5);
  if (!exhaustive) params["repeats"] = repeats;
  for (std::size_t j : features) {
    if (exhaustive) {
      scores.push_back(pfi_exhaustive(ctx.predictor, ctx.data, j, loss));
    } else {
      scores.push_back(pfi_permutation(ctx.predictor, ctx.data, j, loss, repeats, ctx.seed));
      replicates[ctx.data.meta(j).name] = scores.back().replicates;
    }
  }
  out.document["params"] = std::move(params);
  scores_output(ctx, out, scores);
  if (!exhaustive) out.document["details"] = {{"replicates", std::move(replicates)}};
  return out;
}

Output run_ici(const Context& ctx) {
  const auto features = selected_features(ctx);
  const std::size_t row = *ctx.config.row;
  Json params = {{"row", row}};
  loss_params(ctx.config, params);
  return curve_output(
      ctx, features,
      ici_curve(ctx.predictor, ctx.data, row, features[0], make_loss(ctx.config)),
      std::move(params));
}

Output run_pi(const Context& ctx) {
  const auto features = selected_features(ctx);
  Json params = Json::object();
  loss_params(ctx.config, params);
  return curve_output(
      ctx, features, pi_curve(ctx.predictor, ctx.data, features[0], make_loss(ctx.config)),
      std::move(params));
}

Output run_sfimp(const Context& ctx) {
  const auto features = selected_features(ctx);
  SfimpOptions options;
  const bool permutation = ctx.config.mode.value_or("exhaustive") == "permutation";
  options.mode = permutation ? PerturbationMode::kPermutation : PerturbationMode::kExhaustive;
  options.seed = ctx.seed;
  options.max_features = ctx.config.cap;
  const auto all = sfimp_all(ctx.predictor, ctx.data, make_loss(ctx.config), options);
  Output out = begin(ctx, features, permutation);
  Json params = {{"mode", permutation ? "permutation" : "exhaustive"}, {"cap", ctx.config.cap}};
  loss_params(ctx.config, params);
  out.document["params"] = std::move(params);
  std::vector<ImportanceScore> scores;
  for (std::size_t j : features) scores.push_back(all[j]);
  scores_output(ctx, out, scores);
  out.document["details"] = {
      {"full_payout", *all.front().full_payout},
      {"payout", "GE(features outside K perturbed) - GE(all features perturbed)"}};
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) fail(ErrorCode::kIo, "failed writing '" + path + "'");
}

void run_fit(const RunConfig& c) {
  CsvOptions options;
  options.target = c.target;
  for (const auto& [name, kind] : c.kinds) {
    options.kinds[name] =
        kind == "categorical" ? FeatureKind::kCategorical : FeatureKind::kContinuous;
  }
  const Dataset data = load_csv(c.data, options);
  const auto model = c.model_kind == "linear" ? refmodels::fit_linear(data)
                     : c.model_kind == "knn"  ? refmodels::fit_knn(data, c.k)
                                              : refmodels::fit_stump(data);
  write_file(*c.out, model.serialize());
}

}  // namespace

Output execute(const RunConfig& config) {
  const auto model = refmodels::ReferenceModel::load(config.model);
  Context ctx{config, load_for_model(config, model),
              model.handle().with_threads(config.threads), StageTrace{},
              config.seed.value_or(0)};
  if (config.sample) {
    ctx.data = sample_observations(ctx.data, *config.sample, ctx.seed, &ctx.trace);
  }
  const std::string& m = config.method;
  Output out;
  if (m == "ice") out = run_ice(ctx);
  else if (m == "pd") out = run_pd(ctx);
  else if (m == "ces") out = run_ces(ctx);
  else if (m == "ale") out = run_ale(ctx);
  else if (m == "me") out = run_me(ctx);
  else if (m == "ame") out = run_ame(ctx);
  else if (m == "shapley") out = run_shapley(ctx);
  else if (m == "lime") out = run_lime(ctx);
  else if (m == "pd-importance") out = run_variance(ctx, false);
  else if (m == "firm") out = run_variance(ctx, true);
  else if (m == "pfi") out = run_pfi(ctx);
  else if (m == "ici") out = run_ici(ctx);
  else if (m == "pi") out = run_pi(ctx);
  else if (m == "sfimp") out = run_sfimp(ctx);
  else fail(ErrorCode::kInvalidArgument, "method '" + m + "' produces no document");
  if (config.sample) out.document["params"]["sample"] = *config.sample;
  return out;
}

int run(RunConfig config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.method == "fit") {
      run_fit(config);
      return 0;
    }
    const Output result = execute(config);
    if (config.format == OutputFormat::kJson) {
      const std::string text = to_json_text(result.document);
      if (config.out) write_file(*config.out, text);
      else out << text;
    } else {
      const std::string text = to_csv_text(result);
      if (config.out) {
        write_file(*config.out, text);
        write_file(*config.out + ".trace.json", to_json_text(trace_sidecar(result.document)));
      } else {
        out << text;
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "sipa: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "sipa: internal error: " << e.what() << '\n';
    return 3;
  }
}

namespace {

// Options shared by every analysis subcommand; values land in `c` after
// parsing, optionals only when given.
struct Bindings {
  RunConfig c;
  std::string format = "json";
  std::vector<std::string> kinds;
  std::uint64_t seed = 0;
  std::string target, out, mode;
  std::size_t row = 0, intervals = 0, iterations = 0, repeats = 0, samples = 0,
              sample = 0;
  double h = 0.0, kernel_width = 0.0;
  std::vector<std::pair<CLI::Option*, std::function<void()>>> setters;

  template <typename T, typename Apply>
  void opt(CLI::App* app, const std::string& flags, T& var, const std::string& help,
           Apply apply) {
    CLI::Option* o = app->add_option(flags, var, help);
    setters.emplace_back(o, apply);
  }

  void common(CLI::App* app) {
    app->add_option("--data", c.data, "CSV data file")->required();
    app->add_option("--threads", c.threads, "prediction worker threads")
        ->check(CLI::Range(1, 1024));
    opt(app, "--target", target, "target column", [this] { c.target = target; });
    opt(app, "--seed", seed, "random seed", [this] { c.seed = seed; });
    opt(app, "--out", out, "output file (stdout if omitted)", [this] { c.out = out; });
    app->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--column-kind", kinds, "NAME=continuous|categorical");
  }

  void analysis(CLI::App* app) {
    // --h is the finite-difference step, so help is long-form only here.
    app->set_help_flag("--help", "print this help and exit");
    common(app);
    app->add_option("--model", c.model, "model file from 'sipa fit'")->required();
    app->add_option("--feature,--features", c.features, "feature name(s)")
        ->delimiter(',');
    opt(app, "--row", row, "0-based observation index", [this] { c.row = row; });
    app->add_option("--grid", c.grid, "observed | equidistant:K");
    opt(app, "--intervals", intervals, "ALE intervals", [this] { c.intervals = intervals; });
    opt(app, "--h", h, "finite-difference step", [this] { c.h = h; });
    opt(app, "--iterations", iterations, "Monte Carlo iterations",
        [this] { c.iterations = iterations; });
    opt(app, "--repeats", repeats, "PFI permutation repeats", [this] { c.repeats = repeats; });
    opt(app, "--samples", samples, "LIME samples", [this] { c.samples = samples; });
    opt(app, "--kernel-width", kernel_width, "LIME kernel width",
        [this] { c.kernel_width = kernel_width; });
    app->add_option("--loss", c.loss, "squared | absolute | zero_one");
    app->add_option("--threshold", c.threshold, "zero_one threshold");
    opt(app, "--mode", mode, "method mode", [this] { c.mode = mode; });
    app->add_option("--cap", c.cap, "exact enumeration feature cap");
    opt(app, "--sample", sample, "subsample m rows first", [this] { c.sample = sample; });
  }

  void apply() {
    for (auto& [o, set] : setters) {
      if (o->count() > 0) set();
    }
    c.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    for (const auto& spec : kinds) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos || eq == 0) {
        fail(ErrorCode::kInvalidArgument, "--column-kind expects NAME=KIND, got '" + spec + "'");
      }
      c.kinds[spec.substr(0, eq)] = spec.substr(eq + 1);
    }
  }
};

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sipa: model-agnostic feature effects and importance"};
  app.name("sipa");
  app.require_subcommand(1);
  Bindings b;

  for (const auto& name : method_names()) {
    if (name == "fit") continue;
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " method");
    b.analysis(sub);
  }
  for (const char* alias :
       {"shapley_exact", "shapley_mc", "pd_importance", "pfi_permutation", "pfi_exhaustive"}) {
    CLI::App* sub = app.add_subcommand(alias, "alias")->group("");
    b.analysis(sub);
  }
  CLI::App* fit = app.add_subcommand("fit", "fit a reference model to a CSV file");
  b.common(fit);
  fit->add_option("--kind", b.c.model_kind, "linear | knn | stump")
      ->check(CLI::IsMember({"linear", "knn", "stump"}));
  fit->add_option("--k", b.c.k, "neighbours for knn");

  std::string config_path;
  std::size_t threads_override = 0;
  std::string out_override;
  CLI::App* run_cmd = app.add_subcommand("run", "run a JSON config file");
  run_cmd->add_option("--config", config_path, "config file")->required();
  auto* t_opt = run_cmd->add_option("--threads", threads_override, "override threads")
                    ->check(CLI::Range(1, 1024));
  auto* o_opt = run_cmd->add_option("--out", out_override, "override output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      RunConfig c = load_config(config_path);
      if (t_opt->count() > 0) c.threads = threads_override;
      if (o_opt->count() > 0) c.out = out_override;
      return run(std::move(c), out, err);
    }
    b.apply();
    for (CLI::App* sub : app.get_subcommands()) b.c.method = sub->get_name();
  } catch (const Error& e) {
    err << "sipa: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return run(std::move(b.c), out, err);
}

}  // namespace sipa::cli
