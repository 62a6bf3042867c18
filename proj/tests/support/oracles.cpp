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

#include "oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sipa::testing {

PredictorHandle handle_of(std::size_t p, RowFn f) {
  return PredictorHandle::from_row_function(
      p, [f = std::move(f)](std::span<const double> row) {
        return f(std::vector<double>(row.begin(), row.end()));
      });
}

RowFn row_fn(const refmodels::ReferenceModel& model) {
  return [model](const std::vector<double>& x) { return model.predict_row(x); };
}

long double mean_ld(const std::vector<double>& v) {
  long double s = 0;
  for (double x : v) s += x;
  return s / static_cast<long double>(v.size());
}

long double sd_ld(const std::vector<double>& v) {
  const long double m = mean_ld(v);
  long double q = 0;
  for (double x : v) q += (x - m) * (x - m);
  return std::sqrt(q / static_cast<long double>(v.size() - 1));
}

long double brute_pd(const RowFn& f, const Dataset& data, const std::vector<std::size_t>& S,
                     const std::vector<double>& v) {
  long double sum = 0;
  for (std::size_t i = 0; i < data.num_rows(); ++i) {
    auto row = data.row(i);
    for (std::size_t k = 0; k < S.size(); ++k) row[S[k]] = v[k];
    sum += f(row);
  }
  return sum / static_cast<long double>(data.num_rows());
}

long double brute_pd_payout(const RowFn& f, const Dataset& data, const std::vector<double>& x,
                            const std::vector<bool>& in_coalition) {
  std::vector<std::size_t> S;
  std::vector<double> v;
  for (std::size_t j = 0; j < in_coalition.size(); ++j) {
    if (in_coalition[j]) {
      S.push_back(j);
      v.push_back(x[j]);
    }
  }
  if (S.empty()) return 0;
  return brute_pd(f, data, S, v) - brute_pd(f, data, {}, {});
}

std::vector<long double> shapley_all_orderings(std::size_t p, const Payout& v) {
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<long double> phi(p, 0);
  long double count = 0;
  do {
    std::vector<bool> in(p, false);
    long double before = v(in);
    for (std::size_t j : order) {
      in[j] = true;
      const long double after = v(in);
      phi[j] += after - before;
      before = after;
    }
    count += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : phi) x /= count;
  return phi;
}

Line weighted_line(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& w) {
  long double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const long double mx = sx / sw, my = sy / sw;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += w[i] * (x[i] - mx) * (x[i] - mx);
    sxy += w[i] * (x[i] - mx) * (y[i] - my);
  }
  Line line;
  line.slope = sxy / sxx;
  line.intercept = my - line.slope * mx;
  return line;
}

long double brute_perturbed_error(const RowFn& f, const Dataset& data,
                                  const std::vector<std::size_t>& perturbed,
                                  const std::function<double(double, double)>& loss) {
  const std::size_t n = data.num_rows();
  const auto& y = data.target();
  if (perturbed.empty()) {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += loss(f(data.row(i)), y(static_cast<long>(i)));
    return s / n;
  }
  long double total = 0;
  for (std::size_t l = 0; l < n; ++l) {
    long double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto row = data.row(i);
      for (std::size_t j : perturbed) row[j] = data.value(l, j);
      s += loss(f(row), y(static_cast<long>(i)));
    }
    total += s / n;
  }
  return total / n;
}

Dataset random_dataset(std::mt19937_64& gen, std::size_t n, std::size_t p, double correlation,
                       bool with_target) {
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<std::vector<double>> cols(p, std::vector<double>(n));
  const double rest = std::sqrt(1.0 - correlation * correlation);
  for (std::size_t i = 0; i < n; ++i) {
    double prev = z(gen);
    cols[0][i] = prev;
    for (std::size_t j = 1; j < p; ++j) {
      prev = correlation * prev + rest * z(gen);
      cols[j][i] = prev;
    }
  }
  std::optional<std::vector<double>> target;
  if (with_target) {
    std::vector<double> y(n);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::vector<double> beta(p);
    for (auto& b : beta) b = coef(gen);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.5 * z(gen);
      for (std::size_t j = 0; j < p; ++j) s += beta[j] * cols[j][i] + 0.3 * cols[j][i] * cols[j][i];
      y[i] = s;
    }
    target = std::move(y);
  }
  return Dataset::from_columns(cols, target);
}

std::vector<BatteryCase> refmodel_battery(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<BatteryCase> out;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t n = 8 + gen() % 25;
    const std::size_t p = 1 + gen() % 4;
    const double rho = (gen() % 2 == 0) ? 0.0 : 0.7;
    Dataset data = random_dataset(gen, n, p, rho);
    switch (c % 3) {
      case 0: {
        auto m = refmodels::fit_linear(data);
        out.push_back({"linear#" + std::to_string(c), std::move(data), std::move(m)});
        break;
      }
      case 1: {
        const std::size_t k = 1 + gen() % 4;
        auto m = refmodels::fit_knn(data, k);
        out.push_back({"knn#" + std::to_string(c), std::move(data), std::move(m)});
        break;
      }
      default: {
        auto m = refmodels::fit_stump(data);
        out.push_back({"stump#" + std::to_string(c), std::move(data), std::move(m)});
        break;
      }
    }
  }
  return out;
}

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  const auto base = std::filesystem::temp_directory_path();
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto candidate = base / ("sipa-test-" + std::to_string(rd()) + "-" +
                             std::to_string(counter++));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
  throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sipa::testing
