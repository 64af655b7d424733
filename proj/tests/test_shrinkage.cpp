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

#include "selekta/shrinkage.hpp"

#include <cmath>

#include "doctest.h"
#include "selekta/dataset.hpp"
#include "selekta/errors.hpp"
#include "selekta/rng.hpp"

using selekta::LassoFit;
using selekta::Matrix;
using selekta::Vector;

namespace {

selekta::StandardizedDataset example_dataset() {
  const auto& schema = selekta::VariableSchema::canonical();
  const std::string path =
      std::string(SELEKTA_SOURCE_DIR) + "/data/example_indicators.csv";
  return selekta::standardize(selekta::load_csv(path, schema), schema);
}

// Random standardized-ish problem: centered columns, planted sparse signal.
struct Problem {
  Matrix x;
  Vector y;
};

Problem random_problem(std::size_t n, std::size_t p, selekta::RngStream& rng) {
  Problem prob;
  prob.x = Matrix(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      prob.x(i, j) = rng.normal();
      mean += prob.x(i, j);
    }
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) prob.x(i, j) -= mean;
  }
  prob.y.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prob.y[i] = 1.5 * prob.x(i, 0) - 0.8 * prob.x(i, 1 % p) + 0.3 * rng.normal();
  }
  return prob;
}

}  // namespace

TEST_SUITE("shrinkage") {

TEST_CASE("single-column fits follow the analytic soft-threshold solution") {
  const std::size_t n = 10;
  Matrix x(n, 1);
  Vector y(n);
  selekta::RngStream rng(2);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x(i, 0) = rng.normal();
    mean += x(i, 0);
  }
  mean /= n;
  for (std::size_t i = 0; i < n; ++i) x(i, 0) -= mean;
  for (std::size_t i = 0; i < n; ++i) y[i] = 0.7 * x(i, 0);

  double xy = 0.0, xx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xy += x(i, 0) * y[i];
    xx += x(i, 0) * x(i, 0);
  }
  for (double lambda : {0.0, 0.01, 0.05, 0.2}) {
    const double rho = xy / n;
    const double expected =
        (std::abs(rho) > lambda ? (rho > 0 ? rho - lambda : rho + lambda) : 0.0) * n / xx;
    LassoFit fit = selekta::lasso_fit(x, y, lambda);
    CHECK(fit.coefficients[0] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("at lambda_max and above, every coefficient is zero") {
  selekta::RngStream rng(44);
  Problem prob = random_problem(25, 6, rng);
  const double lmax = selekta::lasso_lambda_max(prob.x, prob.y);
  for (double lambda : {lmax, lmax * 1.5}) {
    LassoFit fit = selekta::lasso_fit(prob.x, prob.y, lambda);
    for (double b : fit.coefficients) CHECK(b == 0.0);
    CHECK(selekta::lasso_kkt_ok(prob.x, prob.y, fit));
  }
  // Slightly below, something activates.
  LassoFit below = selekta::lasso_fit(prob.x, prob.y, lmax * 0.99);
  std::size_t active = 0;
  for (double b : below.coefficients) active += b != 0.0;
  CHECK(active >= 1);
}

TEST_CASE("solutions satisfy the optimality conditions across random problems") {
  selekta::RngStream rng(321);
  for (int rep = 0; rep < 40; ++rep) {
    auto sub = rng.split(static_cast<std::uint64_t>(rep));
    const std::size_t n = 20 + sub.uniform_below(20);
    const std::size_t p = 4 + sub.uniform_below(7);
    Problem prob = random_problem(n, p, sub);
    const double lmax = selekta::lasso_lambda_max(prob.x, prob.y);
    const double lambda = lmax * (0.01 + 0.98 * sub.uniform01());
    LassoFit fit = selekta::lasso_fit(prob.x, prob.y, lambda);
    CHECK(selekta::lasso_kkt_ok(prob.x, prob.y, fit));
  }
}

TEST_CASE("kkt check rejects a perturbed solution") {
  selekta::RngStream rng(7);
  Problem prob = random_problem(30, 5, rng);
  const double lambda = 0.2 * selekta::lasso_lambda_max(prob.x, prob.y);
  LassoFit fit = selekta::lasso_fit(prob.x, prob.y, lambda);
  REQUIRE(selekta::lasso_kkt_ok(prob.x, prob.y, fit));
  LassoFit tampered = fit;
  bool perturbed = false;
  for (double& b : tampered.coefficients) {
    if (b != 0.0) {
      b += 0.05;
      perturbed = true;
      break;
    }
  }
  REQUIRE(perturbed);
  CHECK_FALSE(selekta::lasso_kkt_ok(prob.x, prob.y, tampered));
}

TEST_CASE("the objective never increases between sweeps") {
  selekta::RngStream rng(99);
  Problem prob = random_problem(40, 8, rng);
  const double lambda = 0.05 * selekta::lasso_lambda_max(prob.x, prob.y);
  LassoFit fit = selekta::lasso_fit(prob.x, prob.y, lambda);
  REQUIRE(fit.objective_trace.size() == fit.sweeps);
  for (std::size_t s = 1; s < fit.objective_trace.size(); ++s)
    CHECK(fit.objective_trace[s] <= fit.objective_trace[s - 1] + 1e-12);
}

TEST_CASE("warm starts converge to the same solution as cold starts") {
  selekta::RngStream rng(555);
  Problem prob = random_problem(35, 7, rng);
  const double lmax = selekta::lasso_lambda_max(prob.x, prob.y);
  LassoFit first = selekta::lasso_fit(prob.x, prob.y, lmax * 0.5);
  LassoFit warm = selekta::lasso_fit(prob.x, prob.y, lmax * 0.05, &first.coefficients);
  LassoFit cold = selekta::lasso_fit(prob.x, prob.y, lmax * 0.05);
  for (std::size_t j = 0; j < 7; ++j)
    CHECK(warm.coefficients[j] == doctest::Approx(cold.coefficients[j]).epsilon(1e-7));
}

TEST_CASE("the penalty grid is descending, log-spaced, and spans 1e4") {
  Vector grid = selekta::lasso_lambda_grid(2.0, 100);
  REQUIRE(grid.size() == 100);
  CHECK(grid.front() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(grid.back() == doctest::Approx(2e-4).epsilon(1e-12));
  const double ratio = grid[1] / grid[0];
  for (std::size_t g = 1; g < 100; ++g) {
    CHECK(grid[g] < grid[g - 1]);
    CHECK(grid[g] / grid[g - 1] == doctest::Approx(ratio).epsilon(1e-10));
  }
  CHECK_THROWS_AS(selekta::lasso_lambda_grid(0.0, 10), selekta::ArgumentError);
  CHECK_THROWS_AS(selekta::lasso_lambda_grid(1.0, 1), selekta::ArgumentError);
}

TEST_CASE("the pinned-penalty fit on the example table reproduces frozen values") {
  auto ds = example_dataset();
  CHECK(selekta::lasso_lambda_max(ds.x, ds.y) ==
        doctest::Approx(0.4863125).epsilon(1e-9));

  LassoFit fit = selekta::lasso_fit(ds.x, ds.y, 0.07686471);
  CHECK(selekta::lasso_kkt_ok(ds.x, ds.y, fit));

  const auto& schema = selekta::VariableSchema::canonical();
  const std::vector<std::string> expected_support = {"DINV", "FDEV", "FDI", "IND",
                                                     "INFL", "TR",   "URB"};
  std::vector<std::string> support;
  for (std::size_t j = 0; j < 12; ++j)
    if (fit.coefficients[j] != 0.0) support.push_back(schema.features()[j].code);
  CHECK(support == expected_support);

  // Frozen reference coefficients for this table at this penalty.
  CHECK(fit.coefficients[schema.feature_index("DINV")] ==
        doctest::Approx(0.355962964509).epsilon(1e-6));
  CHECK(fit.coefficients[schema.feature_index("TR")] ==
        doctest::Approx(-0.280237468403).epsilon(1e-6));
  CHECK(fit.coefficients[schema.feature_index("URB")] ==
        doctest::Approx(0.272122812001).epsilon(1e-6));
  CHECK(fit.objective == doctest::Approx(0.239778246895).epsilon(1e-8));

  std::vector<std::size_t> support_idx;
  for (std::size_t j = 0; j < 12; ++j)
    if (fit.coefficients[j] != 0.0) support_idx.push_back(j);
  auto refit = selekta::post_lasso_ols(ds.x, ds.y, support_idx);
  CHECK(refit.adj_r_squared == doctest::Approx(0.732308747465).epsilon(1e-9));
  CHECK(refit.coefficients[0] == doctest::Approx(0.463291767795).epsilon(1e-8));
}

TEST_CASE("cross-validated penalty selection is reproducible and coherent") {
  auto ds = example_dataset();
  selekta::RngStream rng(20211990);
  auto folds = selekta::make_folds(ds.n(), 5, rng);

  auto first = selekta::lasso_cv(ds.x, ds.y, folds, 60);
  auto second = selekta::lasso_cv(ds.x, ds.y, folds, 60);
  REQUIRE(first.lambdas.size() == 60);
  REQUIRE(first.mean_rmse.size() == 60);
  CHECK(first.best_lambda == second.best_lambda);
  CHECK(first.fit.coefficients == second.fit.coefficients);
  CHECK(first.best_lambda == first.lambdas[first.best_index]);
  CHECK(selekta::lasso_kkt_ok(ds.x, ds.y, first.fit));
  CHECK_FALSE(first.support.empty());
  for (std::size_t g = 0; g < 60; ++g) CHECK(first.mean_rmse[g] > 0.0);
  const double best = first.mean_rmse[first.best_index];
  for (double v : first.mean_rmse) CHECK(v >= best - 1e-15);
}

TEST_CASE("shrinkage argument validation") {
  Matrix x(5, 1, 0.0);
  Vector y(5, 1.0);
  CHECK_THROWS_AS(selekta::lasso_fit(x, y, 0.1), selekta::ArgumentError);  // zero column
  Matrix x2(5, 1, 1.0);
  CHECK_THROWS_AS(selekta::lasso_fit(x2, y, -0.1), selekta::ArgumentError);
  Vector bad_warm(3, 0.0);
  CHECK_THROWS_AS(selekta::lasso_fit(x2, y, 0.1, &bad_warm), selekta::ArgumentError);
}

}  // TEST_SUITE
