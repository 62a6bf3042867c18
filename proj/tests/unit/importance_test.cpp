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
#include "sipa/effects/partial_dependence.hpp"
#include "sipa/importance/permutation_importance.hpp"
#include "sipa/importance/sfimp.hpp"
#include "sipa/importance/variance_importance.hpp"

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

const RowFn kFirst = [](const std::vector<double>& x) { return x[0]; };
const RowFn kConstant = [](const std::vector<double>&) { return -1.5; };
const LossFunction kSquared = LossFunction::squared();

Dataset two_point() { return Dataset::from_columns({{0, 2}}, std::vector<double>{0, 2}); }

TEST(PdImportanceTest, Examples) {
  const Dataset d = Dataset::from_columns({{0, 1, 2}, {7, -3, 1}});
  EXPECT_EQ(pd_importance(handle_of(2, kConstant), d, 0).value, 0.0);
  EXPECT_EQ(pd_importance(handle_of(2, kFirst), d, 0).value, 1.0);
  EXPECT_EQ(firm(handle_of(2, kFirst), d, 0).value, 1.0);
  EXPECT_EQ(firm(handle_of(2, kConstant), d, 1).value, 0.0);
  EXPECT_EQ(pd_importance(handle_of(2, kFirst), d, 0).method, ImportanceMethod::kPdSd);

  const Dataset single = Dataset::from_columns({{4}});
  EXPECT_EQ(code_of([&] { pd_importance(handle_of(1, kFirst), single, 0); }),
            ErrorCode::kUndefinedVariance);
}

TEST(PdImportanceTest, CategoricalRangeOverFour) {
  Matrix m(3, 1);
  m << 0, 1, 1;
  const Dataset d(m, {FeatureMeta::categorical("g", {"lo", "hi"})});
  const RowFn f = [](const std::vector<double>& x) { return x[0] == 0 ? 1.0 : 5.0; };
  EXPECT_EQ(pd_importance(handle_of(1, f), d, 0).value, 1.0);
  // Scale covariance on the categorical branch.
  const RowFn g = [&](const std::vector<double>& x) { return 3.0 * f(x); };
  EXPECT_EQ(pd_importance(handle_of(1, g), d, 0).value, 3.0);
}

TEST(PdImportanceTest, ScaleCovarianceAndFirmEquivalence) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset d = testing::random_dataset(gen, 15, 3, 0.5);
    const RowFn f = [](const std::vector<double>& x) {
      return x[0] * x[0] - std::sin(x[1]) * x[2];
    };
    for (std::size_t j = 0; j < 3; ++j) {
      const double base = pd_importance(handle_of(3, f), d, j).value;
      EXPECT_GE(base, 0.0);
      EXPECT_EQ(firm(handle_of(3, f), d, j).value, base);
      const RowFn scaled = [&](const std::vector<double>& x) { return 4.0 * f(x); };
      EXPECT_NEAR(pd_importance(handle_of(3, scaled), d, j).value, 4.0 * base,
                  1e-12 * (1 + base));
      // Independent oracle: n-1 sd of the brute-force PD at each observation.
      std::vector<double> pd;
      for (std::size_t i = 0; i < d.num_rows(); ++i) {
        pd.push_back(static_cast<double>(testing::brute_pd(f, d, {j}, {d.value(i, j)})));
      }
      EXPECT_NEAR(base, static_cast<double>(testing::sd_ld(pd)), 1e-10);
    }
  }
}

TEST(CesTest, IdenticalToPd) {
  std::mt19937_64 gen(2);
  const Dataset d = testing::random_dataset(gen, 12, 2);
  const RowFn f = [](const std::vector<double>& x) { return x[0] * x[1]; };
  const auto ces = ces_curve(handle_of(2, f), d, 1);
  const auto pd = pd_curve(handle_of(2, f), d, Grid::observed(d, 1));
  EXPECT_EQ(ces.values(), pd.values());
  EXPECT_EQ(ces.method, "ces");

  const Dataset e = Dataset::from_columns({{9, 9, 9}, {0, 2, 4}});
  const RowFn sum = [](const std::vector<double>& x) { return x[0] + x[1] - 9; };
  EXPECT_EQ(ces_curve(handle_of(2, sum), e, 1).values(), (std::vector<double>{0, 2, 4}));
  for (double v : ces_curve(handle_of(2, kConstant), e, 0).values()) EXPECT_EQ(v, -1.5);
}

TEST(PfiTest, HandExample) {
  const Dataset d = two_point();
  const auto h = handle_of(1, kFirst);
  const auto ici = ici_curve(h, d, 0, 0, kSquared);
  ASSERT_EQ(ici.points.size(), 2u);
  EXPECT_EQ(ici.points[0].x[0], 0.0);
  EXPECT_EQ(ici.points[0].y, 0.0);
  EXPECT_EQ(ici.points[1].y, 4.0);
  const auto ici2 = ici_curve(h, d, 1, 0, kSquared);
  EXPECT_EQ(ici2.values(), (std::vector<double>{4, 0}));
  EXPECT_EQ(pi_curve(h, d, 0, kSquared).values(), (std::vector<double>{2, 2}));
  EXPECT_EQ(pfi_exhaustive(h, d, 0, kSquared).value, 2.0);

  // A permutation of two rows either swaps (4) or keeps (0).
  const auto perm = pfi_permutation(h, d, 0, kSquared, 40, 5);
  for (double r : perm.replicates) EXPECT_TRUE(r == 0.0 || r == 4.0) << r;
  EXPECT_EQ(perm.replicates.size(), 40u);
  EXPECT_EQ(perm.seeds.size(), 40u);
}

TEST(PfiTest, Errors) {
  const Dataset no_target = Dataset::from_columns({{0, 2}});
  const auto h = handle_of(1, kFirst);
  EXPECT_EQ(code_of([&] { pfi_exhaustive(h, no_target, 0, kSquared); }),
            ErrorCode::kMissingTarget);
  EXPECT_EQ(code_of([&] { pfi_permutation(h, two_point(), 0, kSquared, 0, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { ici_curve(h, two_point(), 2, 0, kSquared); }),
            ErrorCode::kInvalidArgument);
}

TEST(PfiTest, SingleRowPiIsTheIci) {
  const Dataset d = Dataset::from_columns({{1}, {2}}, std::vector<double>{0.5});
  const RowFn f = [](const std::vector<double>& x) { return x[0] * x[1]; };
  EXPECT_EQ(pi_curve(handle_of(2, f), d, 0, kSquared).values(),
            ici_curve(handle_of(2, f), d, 0, 0, kSquared).values());
}

TEST(PfiTest, IdentitiesAgainstBruteForce) {
  std::mt19937_64 gen(44);
  for (int trial = 0; trial < 6; ++trial) {
    const Dataset d = testing::random_dataset(gen, 14, 3, 0.6);
    const RowFn f = [](const std::vector<double>& x) {
      return x[0] + 0.5 * x[1] * x[1] - x[2];
    };
    const auto h = handle_of(3, f);
    for (const LossFunction& loss : {kSquared, LossFunction::absolute()}) {
      for (std::size_t j = 0; j < 3; ++j) {
        const auto pi = pi_curve(h, d, j, loss);
        EXPECT_EQ(pfi_exhaustive(h, d, j, loss).value, mean(pi.values()));
        std::vector<std::vector<double>> icis;
        for (std::size_t i = 0; i < d.num_rows(); ++i) {
          icis.push_back(ici_curve(h, d, i, j, loss).values());
        }
        for (std::size_t k = 0; k < pi.points.size(); ++k) {
          std::vector<double> col;
          for (const auto& c : icis) col.push_back(c[k]);
          EXPECT_NEAR(pi.points[k].y, static_cast<double>(testing::mean_ld(col)), 1e-12);
        }
        const long double brute_base = testing::brute_perturbed_error(f, d, {}, loss);
        const long double brute = testing::brute_perturbed_error(f, d, {j}, loss);
        EXPECT_NEAR(pfi_exhaustive(h, d, j, loss).value,
                    static_cast<double>(brute - brute_base), 1e-10);
      }
    }
  }
}

TEST(PfiTest, DummyFeatureScoresZeroEverywhere) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    const Dataset d = testing::random_dataset(gen, 6 + trial, 3, 0.5);
    const RowFn f = [](const std::vector<double>& x) { return x[0] * x[2] + x[2] * x[2]; };
    const auto h = handle_of(3, f);
    EXPECT_EQ(pfi_permutation(h, d, 1, kSquared, 5, 3).value, 0.0);
    EXPECT_EQ(pfi_exhaustive(h, d, 1, kSquared).value, 0.0);
    EXPECT_EQ(sfimp(h, d, 1, kSquared).value, 0.0);
    EXPECT_EQ(sfimp(h, d, 1, LossFunction::absolute()).value, 0.0);
    EXPECT_EQ(pd_importance(h, d, 1).value, 0.0);
    EXPECT_EQ(firm(h, d, 1).value, 0.0);
    for (double v : pi_curve(h, d, 1, kSquared).values()) EXPECT_EQ(v, 0.0);
  }
}

TEST(PfiTest, PermutationConvergesToExhaustive) {
  std::mt19937_64 gen(70);
  const Dataset d = testing::random_dataset(gen, 20, 2, 0.3);
  const RowFn f = [](const std::vector<double>& x) { return 2 * x[0] + x[1]; };
  const auto h = handle_of(2, f);
  const auto perm = pfi_permutation(h, d, 0, kSquared, 200, 2024);
  const double se = sample_sd(perm.replicates) / std::sqrt(200.0);
  const double exhaustive = pfi_exhaustive(h, d, 0, kSquared).value;
  EXPECT_LT(std::abs(perm.value - exhaustive), 3 * se);
  EXPECT_EQ(pfi_permutation(h, d, 0, kSquared, 200, 2024).value, perm.value);
}

TEST(SfimpTest, PayoutExamples) {
  const Dataset d = two_point();
  const auto h = handle_of(1, kFirst);
  EXPECT_EQ(pfi_payout(h, d, {}, kSquared), 0.0);
  const std::size_t all[] = {0};
  EXPECT_EQ(pfi_payout(h, d, all, kSquared), -2.0);
  EXPECT_EQ(pfi_payout(handle_of(1, kConstant), d, all, kSquared), 0.0);
  const auto s = sfimp(h, d, 0, kSquared);
  EXPECT_EQ(s.value, -2.0);
  EXPECT_EQ(*s.full_payout, -2.0);
}

TEST(SfimpTest, EfficiencyAndBruteForcePayout) {
  for (std::size_t p = 1; p <= 3; ++p) {
    std::mt19937_64 gen(500 + p);
    const Dataset d = testing::random_dataset(gen, 9, p, 0.5);
    const RowFn f = [p](const std::vector<double>& x) {
      double s = 0;
      for (std::size_t j = 0; j < p; ++j) s += (j + 1.0) * x[j] + 0.2 * x[j] * x[0];
      return s;
    };
    const auto h = handle_of(p, f);
    const auto scores = sfimp_all(h, d, kSquared);
    double sum = 0;
    for (const auto& s : scores) sum += s.value;
    std::vector<std::size_t> everything(p);
    for (std::size_t j = 0; j < p; ++j) everything[j] = j;
    const double vp = pfi_payout(h, d, everything, kSquared);
    EXPECT_NEAR(sum, vp, 1e-10);
    EXPECT_EQ(*scores[0].full_payout, vp);
    const long double oracle = testing::brute_perturbed_error(f, d, {}, kSquared) -
                               testing::brute_perturbed_error(f, d, everything, kSquared);
    EXPECT_NEAR(vp, static_cast<double>(oracle), 1e-10);
  }
}

TEST(SfimpTest, PermutationModeIsSeeded) {
  std::mt19937_64 gen(8);
  const Dataset d = testing::random_dataset(gen, 12, 2);
  const RowFn f = [](const std::vector<double>& x) { return x[0] - x[1]; };
  SfimpOptions options;
  options.mode = PerturbationMode::kPermutation;
  options.seed = 3;
  const auto a = sfimp_all(handle_of(2, f), d, kSquared, options);
  const auto b = sfimp_all(handle_of(2, f), d, kSquared, options);
  EXPECT_EQ(a[0].value, b[0].value);
  EXPECT_NEAR(a[0].value + a[1].value, *a[0].full_payout, 1e-10);
}

TEST(SfimpTest, Capacity) {
  std::mt19937_64 gen(1);
  const Dataset d = testing::random_dataset(gen, 3, 13);
  EXPECT_EQ(code_of([&] { sfimp(handle_of(13, kFirst), d, 0, kSquared); }),
            ErrorCode::kCapacity);
}

TEST(LossTest, ZeroOneThreshold) {
  const Dataset d = Dataset::from_columns({{0.2, 0.9}}, std::vector<double>{0, 1});
  const auto h = handle_of(1, kFirst);
  // Swapping the predictions flips both labels.
  EXPECT_EQ(pfi_exhaustive(h, d, 0, LossFunction::zero_one()).value, 0.5);
}

}  // namespace
}  // namespace sipa
