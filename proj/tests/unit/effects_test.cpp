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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sipa/core/error.hpp"
#include "sipa/core/reduce.hpp"
#include "sipa/core/stages.hpp"
#include "sipa/effects/ale.hpp"
#include "sipa/effects/coalition.hpp"
#include "sipa/effects/grid.hpp"
#include "sipa/effects/lime.hpp"
#include "sipa/effects/marginal.hpp"
#include "sipa/effects/partial_dependence.hpp"
#include "sipa/effects/shapley.hpp"

namespace sipa {
namespace {

using testing::handle_of;
using testing::RowFn;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no sipa::Error thrown";
  return ErrorCode::kIo;
}

const RowFn kSum = [](const std::vector<double>& x) { return x[0] + x[1]; };
const RowFn kConstant = [](const std::vector<double>&) { return 3.5; };

TEST(GridTest, ObservedEquidistantCustom) {
  const Dataset d = Dataset::from_columns({{3, 1, 3, 2}});
  const Grid obs = Grid::observed(d, 0);
  EXPECT_EQ(obs.axis(0), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(obs.source(), GridSource::kObserved);
  const Grid eq = Grid::equidistant(d, 0, 5);
  EXPECT_EQ(eq.axis(0), (std::vector<double>{1, 1.5, 2, 2.5, 3}));
  EXPECT_EQ(code_of([&] { Grid::custom(d, 0, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { Grid::custom(d, 0, {2, 1}); }), ErrorCode::kInvalidArgument);

  Matrix m(3, 1);
  m << 1, 0, 1;
  const Dataset c(m, {FeatureMeta::categorical("k", {"a", "b", "c"})});
  EXPECT_EQ(Grid::observed(c, 0).axis(0), (std::vector<double>{0, 1, 2}));
}

TEST(GridTest, CartesianLastAxisFastest) {
  const Dataset d = Dataset::from_columns({{0, 1}, {5, 6}});
  const Grid axes[] = {Grid::observed(d, 0), Grid::observed(d, 1)};
  const Grid g = Grid::cartesian(axes);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.point(0), (std::vector<double>{0, 5}));
  EXPECT_EQ(g.point(1), (std::vector<double>{0, 6}));
  EXPECT_EQ(g.point(2), (std::vector<double>{1, 5}));
}

TEST(IceTest, Examples) {
  const Dataset d = Dataset::from_columns({{7, 8}, {0, 4}});
  const auto curves = ice_curves(handle_of(2, kSum), d, Grid::custom(d, 0, {0, 1}));
  ASSERT_EQ(curves.size(), 2u);
  EXPECT_EQ(curves[0].values(), (std::vector<double>{0, 1}));
  EXPECT_EQ(curves[1].values(), (std::vector<double>{4, 5}));
  EXPECT_EQ(*curves[1].observation, 1u);

  for (const auto& c : ice_curves(handle_of(2, kConstant), d, Grid::observed(d, 1))) {
    for (double v : c.values()) EXPECT_EQ(v, 3.5);
  }
}

TEST(IceTest, AdditiveCurvesAreParallel) {
  std::mt19937_64 gen(2);
  const Dataset d = testing::random_dataset(gen, 20, 2, 0.9);
  const RowFn f = [](const std::vector<double>& x) {
    return 0.5 * x[0] * x[0] * x[0] - x[0] + std::cos(x[1]);
  };
  const auto curves = ice_curves(handle_of(2, f), d, Grid::observed(d, 0));
  for (std::size_t i = 1; i < curves.size(); ++i) {
    const double offset = curves[i].points[0].y - curves[0].points[0].y;
    for (std::size_t k = 0; k < curves[i].points.size(); ++k) {
      EXPECT_NEAR(curves[i].points[k].y - curves[0].points[k].y, offset, 1e-12);
    }
  }
}

TEST(IceTest, AnchoredAtObservedValue) {
  std::mt19937_64 gen(4);
  const Dataset d = testing::random_dataset(gen, 15, 3);
  const RowFn f = [](const std::vector<double>& x) { return x[0] * x[1] - x[2] * x[0]; };
  const auto h = handle_of(3, f);
  const Grid grid = Grid::observed(d, 0);
  const auto curves = ice_curves(h, d, grid);
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    const double xi = d.value(i, 0);
    for (const auto& p : curves[i].points) {
      if (p.x[0] == xi) EXPECT_EQ(p.y, h.predict_row(d.row(i)));
    }
  }
}

TEST(PdTest, Examples) {
  const Dataset d = Dataset::from_columns({{9, 9, 9}, {0, 2, 4}});
  const auto pd = pd_curve(handle_of(2, kSum), d, Grid::custom(d, 0, {1}));
  EXPECT_EQ(pd.values(), (std::vector<double>{3}));

  const Dataset one = Dataset::from_columns({{1}, {2}});
  const RowFn f = [](const std::vector<double>& x) { return x[0] * x[1] + 1; };
  const Grid g = Grid::custom(one, 0, {-1, 0, 2});
  EXPECT_EQ(pd_curve(handle_of(2, f), one, g).values(),
            ice_curves(handle_of(2, f), one, g)[0].values());

  for (double v : pd_curve(handle_of(2, kConstant), d, Grid::observed(d, 1)).values()) {
    EXPECT_EQ(v, 3.5);
  }
}

TEST(PdTest, EqualsMeanOfIceAndBruteForce) {
  std::mt19937_64 gen(8);
  const Dataset d = testing::random_dataset(gen, 30, 3, 0.5);
  const RowFn f = [](const std::vector<double>& x) {
    return std::exp(0.3 * x[0]) * x[1] + x[2];
  };
  const Grid grid = Grid::observed(d, 1);
  const auto pd = pd_curve(handle_of(3, f), d, grid);
  const auto ice = ice_curves(handle_of(3, f), d, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> column;
    for (const auto& c : ice) column.push_back(c.points[k].y);
    EXPECT_NEAR(pd.points[k].y, static_cast<double>(testing::mean_ld(column)), 1e-12);
    EXPECT_NEAR(pd.points[k].y,
                static_cast<double>(testing::brute_pd(f, d, {1}, {grid.point(k)[0]})), 1e-12);
  }
}

TEST(PdTest, TwoFeatureSurfaceAndFullSet) {
  std::mt19937_64 gen(12);
  const Dataset d = testing::random_dataset(gen, 12, 3);
  const RowFn f = [](const std::vector<double>& x) { return x[0] * x[1] + x[2] * x[2]; };
  const Grid axes[] = {Grid::equidistant(d, 0, 3), Grid::equidistant(d, 2, 4)};
  const Grid grid = Grid::cartesian(axes);
  const auto pd = pd_curve(handle_of(3, f), d, grid);
  ASSERT_EQ(pd.points.size(), 12u);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto v = grid.point(k);
    EXPECT_NEAR(pd.points[k].y, static_cast<double>(testing::brute_pd(f, d, {0, 2}, v)), 1e-12);
  }
  // S = P: the model evaluated on the grid.
  const Grid all_axes[] = {Grid::custom(d, 0, {1}), Grid::custom(d, 1, {2}),
                           Grid::custom(d, 2, {3})};
  const auto full = pd_curve(handle_of(3, f), d, Grid::cartesian(all_axes));
  EXPECT_EQ(full.values(), (std::vector<double>{f({1, 2, 3})}));
}

TEST(AleTest, ConstantPredictorIsZero) {
  std::mt19937_64 gen(1);
  const Dataset d = testing::random_dataset(gen, 40, 2);
  for (std::size_t k : {1u, 3u, 10u}) {
    for (const auto& p : ale_first_order(handle_of(2, kConstant), d, 0, k).points) {
      EXPECT_EQ(p.y, 0.0);
    }
  }
}

TEST(AleTest, HandExample) {
  const Dataset d = Dataset::from_columns({{0, 1, 2}, {5, -1, 3}});
  const RowFn f = [](const std::vector<double>& x) { return 3 * x[0] + x[1]; };
  const auto curve = ale_first_order(handle_of(2, f), d, 0, std::vector<double>{0, 1, 2});
  ASSERT_EQ(curve.points.size(), 3u);
  // Uncentered (0, 3, 6); rows 0 and 1 sit in [0, 1], row 2 in (1, 2].
  const double constant = (3.0 + 3.0 + 6.0) / 3.0;
  EXPECT_EQ(curve.points[0].x[0], 0.0);
  EXPECT_EQ(curve.points[2].x[0], 2.0);
  EXPECT_NEAR(curve.points[0].y, 0 - constant, 1e-12);
  EXPECT_NEAR(curve.points[1].y, 3 - constant, 1e-12);
  EXPECT_NEAR(curve.points[2].y, 6 - constant, 1e-12);

  // Quantile edges for K = 2 on (0, 1, 2) are the same {0, 1, 2}.
  EXPECT_EQ(ale_interval_edges(d, 0, 2), (std::vector<double>{0, 1, 2}));
}

TEST(AleTest, EdgesMergeDuplicatesAndEmptyIntervals) {
  const Dataset d = Dataset::from_columns({{1, 1, 1, 1, 2, 5}});
  const auto edges = ale_interval_edges(d, 0, 4);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  EXPECT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
  EXPECT_EQ(edges.front(), 1.0);
  EXPECT_EQ(edges.back(), 5.0);
  // (3, 4] is empty and merges into its left neighbour.
  EXPECT_EQ(merge_empty_intervals({0, 1, 3, 4, 6}, {0, 0.5, 2, 5}),
            (std::vector<double>{0, 1, 4, 6}));
  // Leftmost empty interval merges right; [0, 1] is closed so 0 keeps it.
  EXPECT_EQ(merge_empty_intervals({0, 1, 2, 3}, {1.5, 2.5, 0}), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(merge_empty_intervals({-1, 0, 2, 3}, {1.5, 2.5, 3}), (std::vector<double>{-1, 2, 3}));
}

TEST(AleTest, Errors) {
  const Dataset d = Dataset::from_columns({{1, 2, 3}});
  EXPECT_EQ(code_of([&] { ale_first_order(handle_of(1, kConstant), d, 0, 0); }),
            ErrorCode::kInvalidArgument);
  const Dataset flat = Dataset::from_columns({{2, 2, 2}});
  EXPECT_EQ(code_of([&] { ale_first_order(handle_of(1, kConstant), flat, 0, 3); }),
            ErrorCode::kDegenerateBinning);
  Matrix m(2, 1);
  m << 0, 1;
  const Dataset c(m, {FeatureMeta::categorical("k", {"a", "b"})});
  EXPECT_EQ(code_of([&] { ale_first_order(handle_of(1, kConstant), c, 0, 2); }),
            ErrorCode::kUnsupportedKind);
}

TEST(AleTest, AdditiveRecoveryUnderCorrelation) {
  for (double rho : {0.0, 0.9}) {
    std::mt19937_64 gen(21);
    const Dataset d = testing::random_dataset(gen, 80, 2, rho);
    const auto g1 = [](double v) { return 0.7 * v * v * v - 2 * v * v + v; };
    const RowFn f = [&](const std::vector<double>& x) { return g1(x[0]) + 3 * x[1] * x[1]; };
    const auto curve = ale_first_order(handle_of(2, f), d, 0, 8);
    const double offset = curve.points[0].y - g1(curve.points[0].x[0]);
    for (const auto& p : curve.points) EXPECT_NEAR(p.y - g1(p.x[0]), offset, 1e-10);
  }
}

TEST(AleTest, CenteredByWeightedMean) {
  std::mt19937_64 gen(5);
  const Dataset d = testing::random_dataset(gen, 33, 2);
  const RowFn f = [](const std::vector<double>& x) { return std::sin(x[0]) * x[1]; };
  const auto curve = ale_first_order(handle_of(2, f), d, 0, 5);
  // Each observation takes the value at its interval's right boundary.
  std::vector<double> per_obs;
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    const double v = d.value(i, 0);
    std::size_t k = 1;
    while (k + 1 < curve.points.size() && v > curve.points[k].x[0]) ++k;
    per_obs.push_back(curve.points[k].y);
  }
  EXPECT_NEAR(static_cast<double>(testing::mean_ld(per_obs)), 0.0, 1e-12);
}

TEST(MarginalEffectTest, Examples) {
  const std::vector<FeatureMeta> schema = {FeatureMeta::continuous("x1"),
                                           FeatureMeta::continuous("x2")};
  const RowFn affine = [](const std::vector<double>& x) { return 2 * x[0] + x[1]; };
  const double x[] = {1.25, -3};
  EXPECT_EQ(marginal_effect(handle_of(2, affine), schema, x, 0, 0.5).value, 2.0);
  const RowFn sq = [](const std::vector<double>& v) { return v[0] * v[0]; };
  const double x3[] = {3, 0};
  EXPECT_EQ(marginal_effect(handle_of(2, sq), schema, x3, 0, 1.0).value, 6.0);
  EXPECT_EQ(code_of([&] { marginal_effect(handle_of(2, sq), schema, x3, 0, 0.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(MarginalEffectTest, AverageExamples) {
  const Dataset d = Dataset::from_columns({{0, 1, 2}, {4, 4, 4}});
  const RowFn affine = [](const std::vector<double>& x) { return 2 * x[0] + x[1]; };
  EXPECT_EQ(average_marginal_effect(handle_of(2, affine), d, 0, 0.25).value, 2.0);
  const RowFn sq = [](const std::vector<double>& v) { return v[0] * v[0]; };
  EXPECT_EQ(average_marginal_effect(handle_of(2, sq), d, 0, 1.0).value, 2.0);
  EXPECT_EQ(average_marginal_effect(handle_of(2, kConstant), d, 0).value, 0.0);
  EXPECT_EQ(code_of([&] { average_marginal_effect(handle_of(2, sq), d, 0, -1.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(MarginalEffectTest, AverageEqualsMeanOfPointwise) {
  std::mt19937_64 gen(9);
  const Dataset d = testing::random_dataset(gen, 25, 2);
  const RowFn f = [](const std::vector<double>& x) { return std::exp(x[0]) + x[0] * x[1]; };
  const auto h = handle_of(2, f);
  std::vector<double> mes;
  for (std::size_t i = 0; i < d.num_rows(); ++i) {
    mes.push_back(marginal_effect(h, d.meta(), d.row(i), 0, 1e-3).value);
  }
  EXPECT_NEAR(average_marginal_effect(h, d, 0, 1e-3).value,
              static_cast<double>(testing::mean_ld(mes)), 1e-12);
}

TEST(ShapleyTest, PayoutExamples) {
  const Dataset bg = Dataset::from_columns({{0, 2}, {0, 4}});
  const double x[] = {2, 4};
  EXPECT_EQ(pd_payout(handle_of(2, kSum), bg, x, {}), 0.0);
  const std::size_t all[] = {0, 1};
  EXPECT_EQ(pd_payout(handle_of(2, kSum), bg, x, all), 3.0);
  const std::size_t one[] = {1};
  EXPECT_EQ(pd_payout(handle_of(2, kConstant), bg, x, one), 0.0);
}

TEST(ShapleyTest, ExactExamples) {
  const Dataset bg = Dataset::from_columns({{0, 2}, {0, 4}});
  const double x[] = {2, 4};
  const auto e = shapley_exact(handle_of(2, kSum), bg, x);
  EXPECT_NEAR(e.value(0), 1.0, 1e-12);
  EXPECT_NEAR(e.value(1), 2.0, 1e-12);
  EXPECT_NEAR(e.full_payout, 3.0, 1e-12);
  const auto c = shapley_exact(handle_of(2, kConstant), bg, x);
  EXPECT_EQ(c.value(0), 0.0);
  EXPECT_EQ(c.value(1), 0.0);
  const RowFn ignores_second = [](const std::vector<double>& v) { return v[0] * v[0]; };
  EXPECT_EQ(shapley_exact(handle_of(2, ignores_second), bg, x, 1).value(1), 0.0);
}

TEST(ShapleyTest, CapacityError) {
  std::mt19937_64 gen(1);
  const Dataset d = testing::random_dataset(gen, 5, 13, 0.0, false);
  const auto x = d.row(0);
  const RowFn f = [](const std::vector<double>& v) { return v[0]; };
  try {
    shapley_exact(handle_of(13, f), d, x, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacity);
    EXPECT_NE(std::string(e.what()).find("Monte Carlo"), std::string::npos);
  }
  ShapleyOptions wide;
  wide.max_features = 13;
  EXPECT_NO_THROW(shapley_exact(handle_of(13, f), d, x, 0, wide));
}

TEST(ShapleyTest, MatchesAllOrderingsAndEfficiency) {
  for (std::size_t p = 2; p <= 5; ++p) {
    std::mt19937_64 gen(100 + p);
    const Dataset d = testing::random_dataset(gen, 9, p, 0.4, false);
    const RowFn f = [p](const std::vector<double>& x) {
      double s = x[0] * x[1];
      for (std::size_t j = 0; j < p; ++j) s += std::sin(x[j]) * static_cast<double>(j + 1);
      if (p > 2) s += x[0] * x[2] * x[p - 1];
      return s;
    };
    const auto x = testing::random_dataset(gen, 1, p, 0.0, false).row(0);
    const auto e = shapley_exact(handle_of(p, f), d, x);
    const auto brute = testing::shapley_all_orderings(p, [&](const std::vector<bool>& in) {
      return testing::brute_pd_payout(f, d, x, in);
    });
    double sum = 0;
    for (std::size_t j = 0; j < p; ++j) {
      EXPECT_NEAR(e.value(j), static_cast<double>(brute[j]), 1e-10) << "p=" << p;
      sum += e.value(j);
    }
    EXPECT_NEAR(sum, e.full_payout, 1e-10);
    EXPECT_NEAR(e.full_payout,
                static_cast<double>(testing::brute_pd_payout(f, d, x, std::vector<bool>(p, true))),
                1e-10);
  }
}

TEST(ShapleyTest, SymmetryAndAdditiveClosedForm) {
  // Exchangeable features with identical columns and equal x values.
  const Dataset d = Dataset::from_columns({{0, 1, 3}, {0, 1, 3}, {5, -2, 1}});
  const RowFn sym = [](const std::vector<double>& x) { return x[0] * x[1] + x[2]; };
  const double x[] = {2, 2, 0.5};
  const auto e = shapley_exact(handle_of(3, sym), d, x);
  EXPECT_NEAR(e.value(0), e.value(1), 1e-10);

  std::mt19937_64 gen(31);
  const Dataset bg = testing::random_dataset(gen, 15, 4, 0.9, false);
  const std::vector<std::function<double(double)>> g = {
      [](double v) { return v * v; }, [](double v) { return std::sin(v); },
      [](double v) { return -2 * v; }, [](double v) { return v * v * v; }};
  const RowFn additive = [&](const std::vector<double>& v) {
    double s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += g[j](v[j]);
    return s;
  };
  const auto xp = bg.row(3);
  const auto a = shapley_exact(handle_of(4, additive), bg, xp);
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<double> gj;
    for (std::size_t i = 0; i < bg.num_rows(); ++i) gj.push_back(g[j](bg.value(i, j)));
    EXPECT_NEAR(a.value(j), g[j](xp[j]) - static_cast<double>(testing::mean_ld(gj)), 1e-10);
  }
}

TEST(ShapleyTest, MonteCarlo) {
  const Dataset bg = Dataset::from_columns({{0, 2}, {0, 4}});
  const double x[] = {2, 4};
  EXPECT_EQ(code_of([&] { shapley_mc(handle_of(2, kSum), bg, x, 0, 0, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(shapley_mc(handle_of(2, kConstant), bg, x, 0, 50, 1).value(0), 0.0);

  const auto a = shapley_mc(handle_of(2, kSum), bg, x, 0, 2000, 77);
  const auto b = shapley_mc(handle_of(2, kSum), bg, x, 0, 2000, 77);
  EXPECT_EQ(a.value(0), b.value(0));
  EXPECT_EQ(a.standard_errors, b.standard_errors);
  EXPECT_EQ(a.iterations, 2000u);
  EXPECT_EQ(*a.seed, 77u);
  EXPECT_LE(std::abs(a.value(0) - 1.0), 3 * a.standard_errors[0] + 1e-12);
}

TEST(LimeTest, Examples) {
  std::mt19937_64 gen(3);
  const Dataset d = testing::random_dataset(gen, 30, 2);
  const auto x = d.row(4);
  LimeOptions options;
  const auto c = lime_explain(handle_of(2, kConstant), d, x, 0, options, 1);
  EXPECT_NEAR(c.slope, 0.0, 1e-12);
  EXPECT_NEAR(c.intercept, 3.5, 1e-12);

  const RowFn affine = [](const std::vector<double>& v) { return 4 * v[0] + v[1]; };
  const auto e = lime_explain(handle_of(2, affine), d, x, 0, options, 9);
  EXPECT_NEAR(e.slope, 4.0, 1e-8);
  EXPECT_EQ(e.num_samples, 500u);
  EXPECT_EQ(e.seed, 9u);
  for (double w : e.weights) EXPECT_GE(w, 0.0);
  EXPECT_NEAR(e.kernel_width, 0.75 * sample_sd(d.column(0)), 1e-15);

  options.num_samples = 0;
  EXPECT_EQ(code_of([&] { lime_explain(handle_of(2, affine), d, x, 0, options, 9); }),
            ErrorCode::kInvalidArgument);
}

TEST(LimeTest, MatchesClosedFormWeightedLine) {
  std::mt19937_64 gen(6);
  const Dataset d = testing::random_dataset(gen, 40, 3);
  const RowFn f = [](const std::vector<double>& v) { return std::sin(2 * v[1]) + v[0] * v[2]; };
  LimeOptions options;
  options.num_samples = 300;
  options.kernel_width = 0.6;
  const auto e = lime_explain(handle_of(3, f), d, d.row(2), 1, options, 42);
  const auto line = testing::weighted_line(e.perturbed, e.predictions, e.weights);
  EXPECT_NEAR(e.slope, static_cast<double>(line.slope), 1e-9);
  EXPECT_NEAR(e.intercept, static_cast<double>(line.intercept), 1e-9);
  // Same seed, same sample.
  const auto again = lime_explain(handle_of(3, f), d, d.row(2), 1, options, 42);
  EXPECT_EQ(again.slope, e.slope);
  EXPECT_EQ(again.perturbed, e.perturbed);
}

TEST(LimeTest, DegenerateDesign) {
  const Dataset flat = Dataset::from_columns({{1, 1, 1}, {0, 1, 2}});
  LimeOptions options;
  options.kernel_width = 1.0;
  const double x[] = {1, 0};
  EXPECT_EQ(code_of([&] { lime_explain(handle_of(2, kSum), flat, x, 0, options, 1); }),
            ErrorCode::kSingularFit);
}

TEST(CoalitionTest, WeightsSumToOne) {
  for (std::size_t p = 1; p <= 10; ++p) {
    long double total = 0;
    for (std::size_t k = 0; k < p; ++k) {
      // C(p-1, k) coalitions of size k.
      long double c = 1;
      for (std::size_t i = 0; i < k; ++i) c = c * (p - 1 - i) / (i + 1);
      total += c * shapley_weight(p, k);
    }
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-14);
  }
}

}  // namespace
}  // namespace sipa
