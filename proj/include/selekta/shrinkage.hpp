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

#ifndef SELEKTA_SHRINKAGE_HPP_
#define SELEKTA_SHRINKAGE_HPP_

#include <cstddef>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/linear_model.hpp"
#include "selekta/matrix.hpp"

namespace selekta {

/// L1-penalized least squares without an intercept:
///   minimize (1 / 2n) ||y - X b||^2 + lambda * ||b||_1
/// Inputs are expected to be standardized columns (zero mean).
struct LassoFit {
  double lambda = 0.0;
  Vector coefficients;        // exact zeros for excluded features
  std::size_t sweeps = 0;     // coordinate-descent sweeps used
  double objective = 0.0;     // objective at the solution
  Vector objective_trace;     // objective after each sweep
};

/// Cyclic coordinate descent with soft thresholding.  Convergence: the
/// largest per-sweep coefficient change falls below 1e-9 (at most 1e5
/// sweeps, then ConvergenceError).  `warm_start` seeds the coefficients.
LassoFit lasso_fit(const Matrix& x, const Vector& y, double lambda,
                   const Vector* warm_start = nullptr);

/// Verify the subgradient optimality conditions of `fit`:
///   |x_j' r| / n <= lambda + tol   for zero coefficients
///   x_j' r / n == lambda * sign(b_j) within tol   for active ones.
bool lasso_kkt_ok(const Matrix& x, const Vector& y, const LassoFit& fit,
                  double tol = 1e-6);

/// Smallest penalty that zeroes every coefficient: max_j |x_j' y| / n.
double lasso_lambda_max(const Matrix& x, const Vector& y);

/// Log-spaced grid of `count` penalties, descending from lambda_max down
/// to lambda_max * 1e-4.
Vector lasso_lambda_grid(double lambda_max, std::size_t count);

struct LassoCvResult {
  Vector lambdas;          // descending grid
  Vector mean_rmse;        // held-out RMSE per grid point, averaged over folds
  std::size_t best_index = 0;
  double best_lambda = 0.0;
  LassoFit fit;            // full-data fit at best_lambda
  std::vector<std::size_t> support;  // indices of nonzero coefficients
};

/// Cross-validated penalty choice: fit the descending grid on each fold's
/// training rows with warm starts, score held-out RMSE, and pick the
/// penalty with the smallest mean (ties go to the larger penalty).
LassoCvResult lasso_cv(const Matrix& x, const Vector& y, const FoldPlan& folds,
                       std::size_t grid_size = 100);

/// Unpenalized least-squares refit (with intercept) on a chosen support.
OlsFit post_lasso_ols(const Matrix& x, const Vector& y,
                      const std::vector<std::size_t>& support);

}  // namespace selekta

#endif  // SELEKTA_SHRINKAGE_HPP_
