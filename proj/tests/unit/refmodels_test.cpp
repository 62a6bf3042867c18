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

#include <random>

#include "oracles.hpp"
#include "sipa/core/error.hpp"
#include "sipa/importance/permutation_importance.hpp"
#include "sipa/refmodels/reference_model.hpp"

namespace sipa::refmodels {
namespace {

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

TEST(FitLinearTest, RecoversNoiselessCoefficients) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-4, 4);
  std::vector<double> x1, x2, y;
  for (int i = 0; i < 10; ++i) {
    x1.push_back(u(gen));
    x2.push_back(u(gen));
    y.push_back(2 * x1.back() + 3 * x2.back() + 1);
  }
  const auto model = fit_linear(Dataset::from_columns({x1, x2}, y));
  const auto& lp = std::get<LinearParams>(model.params());
  EXPECT_NEAR(lp.coefficients[0], 2.0, 1e-10);
  EXPECT_NEAR(lp.coefficients[1], 3.0, 1e-10);
  EXPECT_NEAR(lp.intercept, 1.0, 1e-10);
  EXPECT_EQ(model.kind(), ModelKind::kLinear);
}

TEST(FitLinearTest, ConstantTargetAndErrors) {
  const auto model =
      fit_linear(Dataset::from_columns({{0, 1, 2, 5}}, std::vector<double>{7, 7, 7, 7}));
  const auto& lp = std::get<LinearParams>(model.params());
  EXPECT_NEAR(lp.coefficients[0], 0.0, 1e-12);
  EXPECT_NEAR(lp.intercept, 7.0, 1e-12);

  EXPECT_EQ(code_of([] {
              fit_linear(Dataset::from_columns({{0, 1}, {2, 3}}, std::vector<double>{1, 2}));
            }),
            ErrorCode::kSingularFit);
  EXPECT_EQ(code_of([] {
              fit_linear(Dataset::from_columns({{0, 1, 2}, {0, 2, 4}},
                                               std::vector<double>{1, 2, 3}));
            }),
            ErrorCode::kSingularFit);
  EXPECT_EQ(code_of([] { fit_linear(Dataset::from_columns({{0, 1, 2}})); }),
            ErrorCode::kMissingTarget);
}

TEST(FitLinearTest, CategoricalOneHot) {
  Matrix m(4, 2);
  m << 0, 1, 1, 2, 2, 3, 0, 4;
  Vector y(4);
  y << 1 + 1, 3 + 2, -2 + 3, 1 + 4;  // level effects (1, 3, -2) plus x
  const Dataset d(m, {FeatureMeta::categorical("g", {"a", "b", "c"}),
                      FeatureMeta::continuous("x")},
                  y);
  const auto model = fit_linear(d);
  const double row[] = {1, 10};
  EXPECT_NEAR(model.predict_row(row), 13.0, 1e-10);
}

TEST(FitKnnTest, Examples) {
  const Dataset d = Dataset::from_columns({{0, 1, 10}}, std::vector<double>{0, 1, 10});
  const double q[] = {0.4};
  EXPECT_EQ(fit_knn(d, 2).predict_row(q), 0.5);
  const double exact[] = {10};
  EXPECT_EQ(fit_knn(d, 1).predict_row(exact), 10.0);
  const double far[] = {-100};
  EXPECT_NEAR(fit_knn(d, 3).predict_row(far), 11.0 / 3.0, 1e-15);
  EXPECT_NEAR(fit_knn(d, 3).predict_row(q), 11.0 / 3.0, 1e-15);
  EXPECT_EQ(code_of([&] { fit_knn(d, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { fit_knn(d, 4); }), ErrorCode::kInvalidArgument);
}

TEST(FitKnnTest, DistanceTiesGoToLowerIndex) {
  const Dataset d = Dataset::from_columns({{-1, 1}}, std::vector<double>{5, 9});
  const double mid[] = {0};
  EXPECT_EQ(fit_knn(d, 1).predict_row(mid), 5.0);
}

TEST(FitStumpTest, Examples) {
  std::vector<double> x, y;
  for (int i = 0; i < 20; ++i) {
    x.push_back(4.0 + 0.1 * i);
    y.push_back(x.back() > 5 ? 10.0 : 0.0);
  }
  const auto model = fit_stump(Dataset::from_columns({x}, y));
  const auto& sp = std::get<StumpParams>(model.params());
  ASSERT_TRUE(sp.has_split);
  EXPECT_EQ(sp.feature, 0u);
  EXPECT_GT(sp.threshold, 5.0);
  EXPECT_LT(sp.threshold, 5.1 + 1e-12);
  EXPECT_EQ(sp.left, 0.0);
  EXPECT_EQ(sp.right, 10.0);

  const auto flat = fit_stump(Dataset::from_columns({{1, 2, 3}}, std::vector<double>{4, 4, 4}));
  EXPECT_FALSE(std::get<StumpParams>(flat.params()).has_split);
  const double any[] = {100};
  EXPECT_EQ(flat.predict_row(any), 4.0);
}

TEST(FitStumpTest, SplitsOnPredictiveFeatureOnly) {
  const Dataset d = Dataset::from_columns({{3, 1, 4, 1, 5, 9}, {0, 0, 0, 1, 1, 1}},
                                          std::vector<double>{2, 2, 2, 8, 8, 8});
  const auto model = fit_stump(d);
  EXPECT_EQ(std::get<StumpParams>(model.params()).feature, 1u);
  EXPECT_EQ(pfi_exhaustive(model.handle(), d, 0, LossFunction::squared()).value, 0.0);
}

TEST(FitStumpTest, CategoricalSplit) {
  Matrix m(4, 1);
  m << 0, 1, 2, 1;
  Vector y(4);
  y << 0, 6, 0, 6;
  const Dataset d(m, {FeatureMeta::categorical("g", {"a", "b", "c"})}, y);
  const auto model = fit_stump(d);
  const auto& sp = std::get<StumpParams>(model.params());
  EXPECT_EQ(sp.threshold, 1.0);
  EXPECT_EQ(sp.left, 6.0);
  EXPECT_EQ(sp.right, 0.0);
}

TEST(ReferenceModelTest, BatteryIsDeterministicAndRoundTrips) {
  for (const auto& c : testing::refmodel_battery(15, 11)) {
    const Vector a = c.model.predict(c.data.features());
    const Vector b = c.model.handle().predict(c.data.features());
    ASSERT_EQ(a.size(), b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) EXPECT_EQ(a(i), b(i)) << c.label;

    const std::string text = c.model.serialize();
    const auto back = ReferenceModel::deserialize(text);
    EXPECT_EQ(back.serialize(), text) << c.label;
    const Vector r = back.predict(c.data.features());
    for (Eigen::Index i = 0; i < a.size(); ++i) EXPECT_EQ(a(i), r(i)) << c.label;
  }
}

TEST(ReferenceModelTest, SaveLoadAndParseErrors) {
  const auto model =
      fit_linear(Dataset::from_columns({{0, 1, 2}}, std::vector<double>{0.1, 1.3, 2.2}));
  testing::TempDir dir;
  model.save(dir.file("m.txt"));
  EXPECT_EQ(ReferenceModel::load(dir.file("m.txt")).serialize(), model.serialize());
  EXPECT_EQ(code_of([&] { ReferenceModel::load(dir.file("absent.txt")); }), ErrorCode::kIo);

  EXPECT_EQ(code_of([] { ReferenceModel::deserialize(""); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { ReferenceModel::deserialize("sipa-model\t2\n"); }), ErrorCode::kParse);
  std::string text = model.serialize();
  text.replace(text.find("linear"), 6, "forest");
  EXPECT_EQ(code_of([&] { ReferenceModel::deserialize(text); }), ErrorCode::kParse);
  const std::string truncated = model.serialize().substr(0, model.serialize().size() - 4);
  EXPECT_EQ(code_of([&] { ReferenceModel::deserialize(truncated); }), ErrorCode::kParse);
}

TEST(ReferenceModelTest, WrongRowWidth) {
  const auto model = fit_knn(Dataset::from_columns({{0, 1}}, std::vector<double>{0, 1}), 1);
  const double row[] = {1, 2};
  EXPECT_EQ(code_of([&] { model.predict_row(row); }), ErrorCode::kShape);
}

}  // namespace
}  // namespace sipa::refmodels
