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

#include "sipa/refmodels/reference_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/QR>

#include "sipa/core/error.hpp"
#include "sipa/core/format.hpp"

namespace sipa::refmodels {

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::kLinear:
      return "linear";
    case ModelKind::kKnn:
      return "knn";
    case ModelKind::kStump:
      return "stump";
  }
  return "unknown";
}

namespace {

std::size_t expanded_width(const std::vector<FeatureMeta>& schema) {
  std::size_t w = 0;
  for (const auto& m : schema) w += m.is_categorical() ? m.levels.size() - 1 : 1;
  return w;
}

double predict_linear(const LinearParams& lp,
                      const std::vector<FeatureMeta>& schema,
                      std::span<const double> row) {
  double out = lp.intercept;
  std::size_t c = 0;
  for (std::size_t j = 0; j < schema.size(); ++j) {
    if (schema[j].is_categorical()) {
      const auto level = static_cast<std::size_t>(row[j]);
      if (level > 0) out += lp.coefficients[c + level - 1];
      c += schema[j].levels.size() - 1;
    } else {
      out += lp.coefficients[c] * row[j];
      ++c;
    }
  }
  return out;
}

double predict_knn(const KnnParams& kp, const std::vector<FeatureMeta>& schema,
                   std::span<const double> row) {
  const auto n = static_cast<std::size_t>(kp.rows.rows());
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t r = 0; r < n; ++r) {
    double d = 0.0;
    for (std::size_t j = 0; j < schema.size(); ++j) {
      const double stored =
          kp.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
      if (schema[j].is_categorical()) {
        d += stored == row[j] ? 0.0 : 1.0;
      } else {
        const double diff = stored - row[j];
        d += diff * diff;
      }
    }
    dist[r] = {d, r};
  }
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kp.k),
                    dist.end());
  std::vector<std::size_t> chosen(kp.k);
  for (std::size_t m = 0; m < kp.k; ++m) chosen[m] = dist[m].second;
  // Sum in row order so that equal neighbour sets give equal bits.
  std::sort(chosen.begin(), chosen.end());
  double sum = 0.0;
  for (std::size_t r : chosen) sum += kp.targets[r];
  return sum / static_cast<double>(kp.k);
}

double predict_stump(const StumpParams& sp,
                     const std::vector<FeatureMeta>& schema,
                     std::span<const double> row) {
  if (!sp.has_split) return sp.left;
  const double v = row[sp.feature];
  const bool left = schema[sp.feature].is_categorical() ? v == sp.threshold
                                                        : v <= sp.threshold;
  return left ? sp.left : sp.right;
}

void check_token(std::string_view s, std::string_view what) {
  if (s.empty() || s.find_first_of("\t\n\r") != std::string_view::npos) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " '" + std::string(s) +
             "' cannot be saved (empty or contains tab/newline)");
  }
}

}  // namespace

ReferenceModel::ReferenceModel(std::vector<FeatureMeta> schema, Params params)
    : schema_(std::move(schema)),
      params_(std::make_shared<const Params>(std::move(params))) {
  if (schema_.empty()) fail(ErrorCode::kInvalidArgument, "model needs features");
  for (const auto& m : schema_) {
    if (m.is_categorical() && m.levels.empty()) {
      fail(ErrorCode::kInvalidArgument, "categorical feature without levels");
    }
  }
  if (const auto* lp = std::get_if<LinearParams>(params_.get())) {
    if (lp->coefficients.size() != expanded_width(schema_)) {
      fail(ErrorCode::kShape, "linear model has " +
                                  std::to_string(lp->coefficients.size()) +
                                  " coefficients, expected " +
                                  std::to_string(expanded_width(schema_)));
    }
  } else if (const auto* kp = std::get_if<KnnParams>(params_.get())) {
    if (static_cast<std::size_t>(kp->rows.cols()) != schema_.size() ||
        static_cast<std::size_t>(kp->rows.rows()) != kp->targets.size()) {
      fail(ErrorCode::kShape, "knn training set does not match its schema");
    }
    if (kp->k < 1 || kp->k > kp->targets.size()) {
      fail(ErrorCode::kInvalidArgument, "knn k out of range");
    }
  } else if (const auto* sp = std::get_if<StumpParams>(params_.get())) {
    if (sp->has_split && sp->feature >= schema_.size()) {
      fail(ErrorCode::kShape, "stump split feature out of range");
    }
  }
}

ModelKind ReferenceModel::kind() const noexcept {
  return static_cast<ModelKind>(params_->index());
}

double ReferenceModel::predict_row(std::span<const double> row) const {
  if (row.size() != schema_.size()) {
    fail(ErrorCode::kShape, "model expects " + std::to_string(schema_.size()) +
                                " features, got " + std::to_string(row.size()));
  }
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearParams>) {
          return predict_linear(p, schema_, row);
        } else if constexpr (std::is_same_v<T, KnnParams>) {
          return predict_knn(p, schema_, row);
        } else {
          return predict_stump(p, schema_, row);
        }
      },
      *params_);
}

Vector ReferenceModel::predict(const Matrix& rows) const {
  Vector out(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    out(i) = predict_row(std::span<const double>(
        rows.row(i).data(), static_cast<std::size_t>(rows.cols())));
  }
  return out;
}

PredictorHandle ReferenceModel::handle() const {
  return PredictorHandle(schema_.size(),
                         [model = *this](const Matrix& rows) { return model.predict(rows); });
}

std::string ReferenceModel::serialize() const {
  std::ostringstream out;
  out << "sipa-model\t1\n";
  out << "kind\t" << to_string(kind()) << '\n';
  for (const auto& m : schema_) {
    check_token(m.name, "feature name");
    out << "feature\t" << m.name << '\t' << sipa::to_string(m.kind);
    for (const auto& level : m.levels) {
      check_token(level, "level");
      out << '\t' << level;
    }
    out << '\n';
  }
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LinearParams>) {
          out << "intercept\t" << format_double(p.intercept) << '\n';
          out << "coefficients";
          for (double c : p.coefficients) out << '\t' << format_double(c);
          out << '\n';
        } else if constexpr (std::is_same_v<T, KnnParams>) {
          out << "k\t" << p.k << '\n';
          out << "training_rows\t" << p.targets.size() << '\n';
          for (Eigen::Index r = 0; r < p.rows.rows(); ++r) {
            out << "row";
            for (Eigen::Index c = 0; c < p.rows.cols(); ++c) {
              out << '\t' << format_double(p.rows(r, c));
            }
            out << '\t' << format_double(p.targets[static_cast<std::size_t>(r)])
                << '\n';
          }
        } else {
          out << "split\t" << (p.has_split ? 1 : 0) << '\n';
          out << "split_feature\t" << p.feature << '\n';
          out << "threshold\t" << format_double(p.threshold) << '\n';
          out << "left\t" << format_double(p.left) << '\n';
          out << "right\t" << format_double(p.right) << '\n';
        }
      },
      *params_);
  out << "end\n";
  return out.str();
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.emplace_back(line);
      start = end + 1;
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line_number() const { return pos_; }

  // Next line split on tabs; the first token must be `key`.
  std::vector<std::string> expect(std::string_view key) {
    if (done()) error("unexpected end of model file, expected '" + std::string(key) + "'");
    auto tokens = split(lines_[pos_++]);
    if (tokens.front() != key) {
      error("expected '" + std::string(key) + "', found '" + tokens.front() + "'");
    }
    return tokens;
  }

  std::string_view peek_key() const {
    if (done()) return {};
    std::string_view line = lines_[pos_];
    return line.substr(0, line.find('\t'));
  }

  double number(const std::string& token) {
    const auto v = parse_double(token);
    if (!v) error("'" + token + "' is not a number");
    return *v;
  }

  std::size_t count(const std::string& token) {
    const double v = number(token);
    if (v < 0 || v != std::floor(v)) error("'" + token + "' is not a count");
    return static_cast<std::size_t>(v);
  }

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorCode::kParse, "model file line " + std::to_string(pos_) + ": " + message);
  }

 private:
  static std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
      const auto cut = line.find('\t', start);
      out.emplace_back(line.substr(start, cut - start));
      if (cut == std::string_view::npos) break;
      start = cut + 1;
    }
    return out;
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

ReferenceModel ReferenceModel::deserialize(std::string_view text) {
  ModelReader in(text);
  const auto header = in.expect("sipa-model");
  if (header.size() != 2 || header[1] != "1") in.error("unsupported model format version");
  const auto kind_line = in.expect("kind");
  if (kind_line.size() != 2) in.error("malformed kind line");
  const std::string& kind = kind_line[1];

  std::vector<FeatureMeta> schema;
  while (in.peek_key() == "feature") {
    const auto t = in.expect("feature");
    if (t.size() < 3) in.error("malformed feature line");
    if (t[2] == "continuous") {
      if (t.size() != 3) in.error("continuous feature with levels");
      schema.push_back(FeatureMeta::continuous(t[1]));
    } else if (t[2] == "categorical") {
      schema.push_back(FeatureMeta::categorical(
          t[1], std::vector<std::string>(t.begin() + 3, t.end())));
    } else {
      in.error("unknown feature kind '" + t[2] + "'");
    }
  }
  if (schema.empty()) in.error("model has no features");

  Params params;
  if (kind == "linear") {
    LinearParams lp;
    const auto icpt = in.expect("intercept");
    if (icpt.size() != 2) in.error("malformed intercept line");
    lp.intercept = in.number(icpt[1]);
    const auto coefs = in.expect("coefficients");
    for (std::size_t c = 1; c < coefs.size(); ++c) lp.coefficients.push_back(in.number(coefs[c]));
    params = std::move(lp);
  } else if (kind == "knn") {
    KnnParams kp;
    const auto k = in.expect("k");
    if (k.size() != 2) in.error("malformed k line");
    kp.k = in.count(k[1]);
    const auto rows = in.expect("training_rows");
    if (rows.size() != 2) in.error("malformed training_rows line");
    const std::size_t n = in.count(rows[1]);
    kp.rows.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(schema.size()));
    for (std::size_t r = 0; r < n; ++r) {
      const auto t = in.expect("row");
      if (t.size() != schema.size() + 2) in.error("training row has the wrong width");
      for (std::size_t c = 0; c < schema.size(); ++c) {
        kp.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            in.number(t[c + 1]);
      }
      kp.targets.push_back(in.number(t.back()));
    }
    params = std::move(kp);
  } else if (kind == "stump") {
    StumpParams sp;
    auto scalar = [&in](std::string_view key) {
      const auto t = in.expect(key);
      if (t.size() != 2) in.error("malformed " + std::string(key) + " line");
      return t[1];
    };
    sp.has_split = in.count(scalar("split")) != 0;
    sp.feature = in.count(scalar("split_feature"));
    sp.threshold = in.number(scalar("threshold"));
    sp.left = in.number(scalar("left"));
    sp.right = in.number(scalar("right"));
    params = sp;
  } else {
    in.error("unknown model kind '" + kind + "'");
  }
  in.expect("end");
  try {
    return ReferenceModel(std::move(schema), std::move(params));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, std::string("invalid model: ") + e.what());
  }
}

void ReferenceModel::save(const std::filesystem::path& path) const {
  const std::string text = serialize();
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

ReferenceModel ReferenceModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

ReferenceModel fit_linear(const Dataset& data) {
  const Vector& y = data.target();
  const std::vector<FeatureMeta> schema(data.meta().begin(), data.meta().end());
  const std::size_t n = data.num_rows();
  const std::size_t p = data.num_features();
  if (n <= p) {
    fail(ErrorCode::kSingularFit, "linear fit needs n > p (n = " +
                                      std::to_string(n) + ", p = " +
                                      std::to_string(p) + ")");
  }
  const std::size_t width = expanded_width(schema);
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                 static_cast<Eigen::Index>(width + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    design(r, 0) = 1.0;
    Eigen::Index c = 1;
    for (std::size_t j = 0; j < p; ++j) {
      const double v = data.value(i, j);
      if (schema[j].is_categorical()) {
        const auto level = static_cast<Eigen::Index>(v);
        if (level > 0) design(r, c + level - 1) = 1.0;
        c += static_cast<Eigen::Index>(schema[j].levels.size()) - 1;
      } else {
        design(r, c++) = v;
      }
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols()) {
    fail(ErrorCode::kSingularFit, "design matrix is rank deficient (rank " +
                                      std::to_string(qr.rank()) + " of " +
                                      std::to_string(design.cols()) + ")");
  }
  const Eigen::VectorXd beta = qr.solve(y);
  LinearParams lp;
  lp.intercept = beta(0);
  lp.coefficients.assign(beta.data() + 1, beta.data() + beta.size());
  return ReferenceModel(schema, std::move(lp));
}

ReferenceModel fit_knn(const Dataset& data, std::size_t k) {
  const Vector& y = data.target();
  if (k < 1 || k > data.num_rows()) {
    fail(ErrorCode::kInvalidArgument, "k must satisfy 1 <= k <= n (k = " +
                                          std::to_string(k) + ", n = " +
                                          std::to_string(data.num_rows()) + ")");
  }
  KnnParams kp;
  kp.k = k;
  kp.rows = data.features();
  kp.targets.assign(y.data(), y.data() + y.size());
  return ReferenceModel({data.meta().begin(), data.meta().end()}, std::move(kp));
}

ReferenceModel fit_stump(const Dataset& data) {
  const Vector& y = data.target();
  const std::vector<FeatureMeta> schema(data.meta().begin(), data.meta().end());
  const std::size_t n = data.num_rows();

  StumpParams best;
  const bool constant_target = (y.array() == y(0)).all();
  double total = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) total += y(i);
  best.left = best.right = constant_target ? y(0) : total / static_cast<double>(n);
  if (constant_target) return ReferenceModel(schema, best);

  double best_sse = 0.0;
  auto consider = [&](std::size_t j, double threshold, double n_left,
                      double s_left, double q_left, double n_right,
                      double s_right, double q_right) {
    const double sse = (q_left - s_left * s_left / n_left) +
                       (q_right - s_right * s_right / n_right);
    if (!best.has_split || sse < best_sse) {
      best_sse = sse;
      best.has_split = true;
      best.feature = j;
      best.threshold = threshold;
      best.left = s_left / n_left;
      best.right = s_right / n_right;
    }
  };

  double q_total = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) q_total += y(i) * y(i);

  for (std::size_t j = 0; j < schema.size(); ++j) {
    if (schema[j].is_categorical()) {
      for (std::size_t level = 0; level < schema[j].levels.size(); ++level) {
        double nl = 0, sl = 0, ql = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (data.value(i, j) == static_cast<double>(level)) {
            const double t = y(static_cast<Eigen::Index>(i));
            nl += 1;
            sl += t;
            ql += t * t;
          }
        }
        if (nl == 0 || nl == static_cast<double>(n)) continue;
        consider(j, static_cast<double>(level), nl, sl, ql,
                 static_cast<double>(n) - nl, total - sl, q_total - ql);
      }
      continue;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return data.value(a, j) < data.value(b, j);
    });
    double nl = 0, sl = 0, ql = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double t = y(static_cast<Eigen::Index>(order[k]));
      nl += 1;
      sl += t;
      ql += t * t;
      const double a = data.value(order[k], j);
      const double b = data.value(order[k + 1], j);
      if (a == b) continue;
      consider(j, a + (b - a) / 2.0, nl, sl, ql, static_cast<double>(n) - nl,
               total - sl, q_total - ql);
    }
  }
  if (!best.has_split) best.left = best.right = total / static_cast<double>(n);
  return ReferenceModel(schema, best);
}

}  // namespace sipa::refmodels
