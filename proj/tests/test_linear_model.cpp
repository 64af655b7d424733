/*
 * Copyright 2026 The Selekta Authors.
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

#include "selekta/linear_model.hpp"

#include <cmath>

#include "doctest.h"
#include "selekta/dataset.hpp"
#include "selekta/errors.hpp"
#include "selekta/rng.hpp"
#include "support/oracles.hpp"

using selekta::Matrix;
using selekta::OlsFit;
using selekta::Vector;

namespace {

selekta::StandardizedDataset example_dataset() {
  const auto& schema = selekta::VariableSchema::canonical();
  const std::string path =
      std::string(SELEKTA_SOURCE_DIR) + "/data/example_indicators.csv";
  return selekta::standardize(selekta::load_csv(path, schema), schema);
}

}  // namespace

TEST_SUITE("linear_model") {

TEST_CASE("simple regression matches hand-computed values") {
  // y on x for x = 0..3, y = {1,2,2,4}: slope 0.9, intercept 0.9.
  Matrix x(4, 1);
  for (std::size_t i = 0; i < 4; ++i) x(i, 0) = static_cast<double>(i);
  Vector y = {1.0, 2.0, 2.0, 4.0};
  OlsFit fit = selekta::ols_fit(x, y, {0});

  CHECK(fit.intercept == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(fit.coefficients[0] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(fit.rss == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(fit.tss == doctest::Approx(4.75).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0 - 0.7 / 4.75).epsilon(1e-12));
  CHECK(fit.adj_r_squared ==
        doctest::Approx(1.0 - (0.7 / 4.75) * 3.0 / 2.0).epsilon(1e-12));
  CHECK(fit.sigma_hat == doctest::Approx(std::sqrt(0.35)).epsilon(1e-12));
  CHECK(fit.std_errors[0] == doctest::Approx(std::sqrt(0.35 / 5.0)).epsilon(1e-12));
  const double t = 0.9 / std::sqrt(0.35 / 5.0);
  CHECK(fit.t_values[0] == doctest::Approx(t).epsilon(1e-12));
  // With one slope, F = t^2 and the p-values coincide.
  CHECK(fit.f_statistic == doctest::Approx(t * t).epsilon(1e-12));
  CHECK(fit.f_p_value == doctest::Approx(fit.p_values[0]).epsilon(1e-10));
  CHECK(fit.k == 2);
  CHECK(fit.n == 4);
}

TEST_CASE("coefficients and standard errors agree with an explicit-inverse oracle") {
  selekta::RngStream rng(808);
  for (int rep = 0; rep < 10; ++rep) {
    auto sub = rng.split(static_cast<std::uint64_t>(rep));
    Matrix x(24, 2);
    Vector y(24);
    for (std::size_t i = 0; i < 24; ++i) {
      x(i, 0) = sub.normal();
      x(i, 1) = sub.normal();
      y[i] = 1.0 + 0.5 * x(i, 0) - 2.0 * x(i, 1) + 0.3 * sub.normal();
    }
    OlsFit fit = selekta::ols_fit(x, y, {0, 1});

    Matrix design(24, 3, 1.0);
    for (std::size_t i = 0; i < 24; ++i) {
      design(i, 1) = x(i, 0);
      design(i, 2) = x(i, 1);
    }
    Vector beta = oracles::normal_equations_3(design, y);
    CHECK(fit.intercept == doctest::Approx(beta[0]).epsilon(1e-9));
    CHECK(fit.coefficients[0] == doctest::Approx(beta[1]).epsilon(1e-9));
    CHECK(fit.coefficients[1] == doctest::Approx(beta[2]).epsilon(1e-9));

    Vector diag = oracles::xtx_inverse_diagonal_3(design);
    const double sigma2 = fit.rss / 21.0;
    CHECK(fit.intercept_se == doctest::Approx(std::sqrt(sigma2 * diag[0])).epsilon(1e-9));
    CHECK(fit.std_errors[0] == doctest::Approx(std::sqrt(sigma2 * diag[1])).epsilon(1e-9));
    CHECK(fit.std_errors[1] == doctest::Approx(std::sqrt(sigma2 * diag[2])).epsilon(1e-9));
  }
}

TEST_CASE("full fit on the example table matches frozen reference statistics") {
  auto ds = example_dataset();
  OlsFit fit = selekta::ols_fit_all(ds.x, ds.y);

  // Reference values computed independently for this table.
  CHECK(fit.r_squared == doctest::Approx(0.820772458188).epsilon(1e-9));
  CHECK(fit.adj_r_squared == doctest::Approx(0.707576115991).epsilon(1e-9));
  CHECK(fit.sigma_hat == doctest::Approx(0.540762317483).epsilon(1e-9));
  CHECK(fit.f_statistic == doctest::Approx(7.250874385656).epsilon(1e-9));
  CHECK(fit.rss == doctest::Approx(5.556053796180).epsilon(1e-9));

  const auto& schema = selekta::VariableSchema::canonical();
  const std::size_t dinv = schema.feature_index("DINV");
  const std::size_t tr = schema.feature_index("TR");
  const std::size_t urb = schema.feature_index("URB");
  CHECK(fit.coefficients[dinv] == doctest::Approx(0.370765330758).epsilon(1e-9));
  CHECK(fit.std_errors[dinv] == doctest::Approx(0.143016467253).epsilon(1e-9));
  CHECK(fit.coefficients[tr] == doctest::Approx(-0.621852042430).epsilon(1e-9));
  CHECK(fit.std_errors[tr] == doctest::Approx(0.196747074921).epsilon(1e-9));
  CHECK(fit.coefficients[urb] == doctest::Approx(0.016048152135).epsilon(1e-9));

  // Standardized response, estimated intercept: the intercept is ~0.
  CHECK(std::abs(fit.intercept) < 1e-12);

  CHECK(selekta::durbin_watson(fit.residuals) ==
        doctest::Approx(1.787020751738).epsilon(1e-9));

  auto ic = selekta::info_criteria(fit.rss, fit.n, fit.k, fit.sigma_hat * fit.sigma_hat);
  CHECK(ic.cp == doctest::Approx(13.0).epsilon(1e-10));  // k exactly, by construction
  CHECK(ic.aic == doctest::Approx(62.7849366718).epsilon(1e-9));
  CHECK(ic.bic == doctest::Approx(83.3052393110).epsilon(1e-9));
}

TEST_CASE("intercept-only fits predict the mean") {
  Matrix x(5, 2, 0.0);
  for (std::size_t i = 0; i < 5; ++i) {
    x(i, 0) = static_cast<double>(i);
    x(i, 1) = static_cast<double>(i * i);
  }
  Vector y = {1.0, 3.0, 2.0, 5.0, 4.0};
  OlsFit fit = selekta::ols_fit(x, y, {});
  CHECK(fit.intercept == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.k == 1);
  CHECK(fit.r_squared == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isnan(fit.f_statistic));
  Vector pred = selekta::predict(fit, x);
  for (double v : pred) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("fitting errors") {
  Matrix x(3, 3, 1.0);
  Vector y = {1.0, 2.0, 3.0};
  // n must exceed number of parameters.
  CHECK_THROWS_AS(selekta::ols_fit(x, y, {0, 1}), selekta::ArgumentError);

  Matrix x2(8, 2);
  selekta::RngStream rng(4);
  for (std::size_t i = 0; i < 8; ++i) {
    x2(i, 0) = rng.normal();
    x2(i, 1) = 2.0 * x2(i, 0);  // collinear
  }
  Vector y2(8, 1.0);
  for (std::size_t i = 0; i < 8; ++i) y2[i] = rng.normal();
  CHECK_THROWS_AS(selekta::ols_fit(x2, y2, {0, 1}), selekta::SingularDesignError);

  // Constant response.
  Matrix x3(6, 1);
  for (std::size_t i = 0; i < 6; ++i) x3(i, 0) = static_cast<double>(i);
  Vector y3(6, 2.0);
  CHECK_THROWS_AS(selekta::ols_fit(x3, y3, {0}), selekta::ArgumentError);
}

TEST_CASE("durbin-watson hand values and bounds") {
  CHECK(selekta::durbin_watson({1.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(selekta::durbin_watson({1.0, -1.0, 1.0, -1.0}) == doctest::Approx(3.0));
  CHECK_THROWS_AS(selekta::durbin_watson({0.0, 0.0, 0.0}), selekta::ArgumentError);
  CHECK_THROWS_AS(selekta::durbin_watson({1.0}), selekta::ArgumentError);

  selekta::RngStream rng(31337);
  for (int rep = 0; rep < 20; ++rep) {
    Vector e(30);
    for (auto& v : e) v = rng.normal();
    const double dw = selekta::durbin_watson(e);
    CHECK(dw >= 0.0);
    CHECK(dw <= 4.0);
  }
}

TEST_CASE("information criteria identities") {
  // For the all-features fit itself, cp reduces to exactly k.
  auto ic = selekta::info_criteria(4.0, 32, 13, 4.0 / (32 - 13));
  CHECK(ic.cp == doctest::Approx(13.0).epsilon(1e-12));
  // aic and bic differ only in the parameter penalty.
  const double gap = ic.bic - ic.aic;
  CHECK(gap == doctest::Approx((std::log(32.0) - 2.0) * 14.0).epsilon(1e-12));
  CHECK_THROWS_AS(selekta::info_criteria(0.0, 32, 3, 1.0), selekta::ArgumentError);
  CHECK_THROWS_AS(selekta::info_criteria(1.0, 3, 3, 1.0), selekta::ArgumentError);
}

TEST_CASE("cross-validated rmse is zero for a noise-free linear response") {
  Matrix x(12, 2);
  selekta::RngStream rng(12);
  Vector y(12);
  for (std::size_t i = 0; i < 12; ++i) {
    x(i, 0) = rng.normal();
    x(i, 1) = rng.normal();
    y[i] = 3.0 + 2.0 * x(i, 0) - x(i, 1);
  }
  auto folds = selekta::make_folds(12, 3, rng);
  CHECK(selekta::cv_rmse(x, y, {0, 1}, folds) < 1e-10);
  // Dropping a needed column makes held-out error strictly positive.
  CHECK(selekta::cv_rmse(x, y, {0}, folds) > 0.1);
}

TEST_CASE("cross-validated rmse matches a direct reimplementation") {
  auto ds = example_dataset();
  selekta::RngStream rng(777);
  auto folds = selekta::make_folds(ds.n(), 5, rng);
  const std::vector<std::size_t> cols = {0, 3, 7};

  double expected = 0.0;
  for (const auto& test_rows : folds) {
    std::vector<std::size_t> train_rows;
    for (std::size_t i = 0; i < ds.n(); ++i) {
      bool held_out = false;
      for (std::size_t t : test_rows) held_out = held_out || t == i;
      if (!held_out) train_rows.push_back(i);
    }
    Matrix xt = ds.x.select_rows(train_rows);
    Vector yt;
    for (std::size_t i : train_rows) yt.push_back(ds.y[i]);
    OlsFit fit = selekta::ols_fit(xt, yt, cols);
    double sse = 0.0;
    for (std::size_t i : test_rows) {
      double pred = fit.intercept;
      for (std::size_t j = 0; j < cols.size(); ++j)
        pred += fit.coefficients[j] * ds.x(i, cols[j]);
      sse += (ds.y[i] - pred) * (ds.y[i] - pred);
    }
    expected += std::sqrt(sse / static_cast<double>(test_rows.size()));
  }
  expected /= static_cast<double>(folds.size());

  CHECK(selekta::cv_rmse(ds.x, ds.y, cols, folds) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("intercept-only cross-validation uses the training mean") {
  Matrix x(9, 1);
  Vector y(9);
  for (std::size_t i = 0; i < 9; ++i) {
    x(i, 0) = static_cast<double>(i);
    y[i] = static_cast<double>(i % 3);
  }
  selekta::FoldPlan folds = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  // Train mean for each fold is 1 (values 0,1,2 twice); test errors are
  // {1,0,1} per fold, so each fold RMSE is sqrt(2/3).
  CHECK(selekta::cv_rmse(x, y, {}, folds) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

}  // TEST_SUITE
