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

#include <algorithm>
#include <cmath>

#include "selekta/errors.hpp"

namespace selekta {

namespace {

constexpr double kCoefTolerance = 1e-9;
constexpr std::size_t kMaxSweeps = 100000;

double soft_threshold(double z, double threshold) {
  if (z > threshold) return z - threshold;
  if (z < -threshold) return z + threshold;
  return 0.0;
}

double lasso_objective(const Vector& residual, const Vector& beta, double lambda,
                       std::size_t n) {
  double rss = 0.0;
  for (double r : residual) rss += r * r;
  double l1 = 0.0;
  for (double b : beta) l1 += std::abs(b);
  return rss / (2.0 * static_cast<double>(n)) + lambda * l1;
}

}  // namespace

LassoFit lasso_fit(const Matrix& x, const Vector& y, double lambda,
                   const Vector* warm_start) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (y.size() != n) throw ArgumentError("lasso_fit: row count mismatch");
  if (p == 0) throw ArgumentError("lasso_fit: need at least one feature");
  if (lambda < 0.0) throw ArgumentError("lasso_fit: lambda must be nonnegative");
  if (warm_start && warm_start->size() != p)
    throw ArgumentError("lasso_fit: warm start length mismatch");

  Vector col_sq(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) col_sq[j] += x(i, j) * x(i, j);
    if (col_sq[j] == 0.0)
      throw ArgumentError("lasso_fit: column " + std::to_string(j) + " is all zero");
  }

  LassoFit fit;
  fit.lambda = lambda;
  fit.coefficients = warm_start ? *warm_start : Vector(p, 0.0);

  Vector residual = y;
  for (std::size_t j = 0; j < p; ++j) {
    if (fit.coefficients[j] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) residual[i] -= fit.coefficients[j] * x(i, j);
  }

  const auto dn = static_cast<double>(n);
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_change = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double old = fit.coefficients[j];
      double xr = 0.0;
      for (std::size_t i = 0; i < n; ++i) xr += x(i, j) * residual[i];
      const double rho = xr / dn + old * col_sq[j] / dn;
      const double updated = soft_threshold(rho, lambda) * dn / col_sq[j];
      if (updated != old) {
        const double delta = updated - old;
        for (std::size_t i = 0; i < n; ++i) residual[i] -= delta * x(i, j);
        fit.coefficients[j] = updated;
      }
      max_change = std::max(max_change, std::abs(updated - old));
    }
    fit.objective_trace.push_back(
        lasso_objective(residual, fit.coefficients, lambda, n));
    if (max_change < kCoefTolerance) {
      fit.sweeps = sweep + 1;
      fit.objective = fit.objective_trace.back();
      return fit;
    }
  }
  throw ConvergenceError("lasso_fit: coordinate descent exhausted " +
                         std::to_string(kMaxSweeps) + " sweeps");
}

bool lasso_kkt_ok(const Matrix& x, const Vector& y, const LassoFit& fit, double tol) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (fit.coefficients.size() != p || y.size() != n)
    throw ArgumentError("lasso_kkt_ok: shape mismatch");

  Vector residual = y;
  for (std::size_t j = 0; j < p; ++j) {
    if (fit.coefficients[j] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) residual[i] -= fit.coefficients[j] * x(i, j);
  }
  const auto dn = static_cast<double>(n);
  for (std::size_t j = 0; j < p; ++j) {
    double xr = 0.0;
    for (std::size_t i = 0; i < n; ++i) xr += x(i, j) * residual[i];
    const double gradient = xr / dn;
    if (fit.coefficients[j] == 0.0) {
      if (std::abs(gradient) > fit.lambda + tol) return false;
    } else {
      const double sign = fit.coefficients[j] > 0.0 ? 1.0 : -1.0;
      if (std::abs(gradient - fit.lambda * sign) > tol) return false;
    }
  }
  return true;
}

double lasso_lambda_max(const Matrix& x, const Vector& y) {
  const std::size_t n = x.rows();
  if (y.size() != n) throw ArgumentError("lasso_lambda_max: row count mismatch");
  double best = 0.0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double xr = 0.0;
    for (std::size_t i = 0; i < n; ++i) xr += x(i, j) * y[i];
    best = std::max(best, std::abs(xr) / static_cast<double>(n));
  }
  return best;
}

Vector lasso_lambda_grid(double lambda_max, std::size_t count) {
  if (!(lambda_max > 0.0))
    throw ArgumentError("lasso_lambda_grid: lambda_max must be positive");
  if (count < 2) throw ArgumentError("lasso_lambda_grid: need at least 2 points");
  Vector grid(count);
  const double log_top = std::log(lambda_max);
  const double log_bottom = std::log(lambda_max * 1e-4);
  for (std::size_t g = 0; g < count; ++g) {
    const double frac = static_cast<double>(g) / static_cast<double>(count - 1);
    grid[g] = std::exp(log_top + frac * (log_bottom - log_top));
  }
  return grid;
}

LassoCvResult lasso_cv(const Matrix& x, const Vector& y, const FoldPlan& folds,
                       std::size_t grid_size) {
  const std::size_t n = x.rows();
  if (folds.empty()) throw ArgumentError("lasso_cv: empty fold plan");

  const double lambda_max = lasso_lambda_max(x, y);
  if (lambda_max <= 0.0)
    throw ArgumentError("lasso_cv: response is orthogonal to every feature");

  LassoCvResult result;
  result.lambdas = lasso_lambda_grid(lambda_max, grid_size);
  result.mean_rmse.assign(grid_size, 0.0);

  for (const auto& test_rows : folds) {
    std::vector<char> in_test(n, 0);
    for (std::size_t idx : test_rows) {
      if (idx >= n) throw ArgumentError("lasso_cv: fold index out of range");
      in_test[idx] = 1;
    }
    std::vector<std::size_t> train_rows;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_test[i]) train_rows.push_back(i);

    const Matrix x_train = x.select_rows(train_rows);
    Vector y_train(train_rows.size());
    for (std::size_t i = 0; i < train_rows.size(); ++i) y_train[i] = y[train_rows[i]];

    Vector warm(x.cols(), 0.0);
    for (std::size_t g = 0; g < grid_size; ++g) {
      const LassoFit fit = lasso_fit(x_train, y_train, result.lambdas[g], &warm);
      warm = fit.coefficients;

      double sse = 0.0;
      for (std::size_t idx : test_rows) {
        double pred = 0.0;
        for (std::size_t j = 0; j < x.cols(); ++j)
          pred += fit.coefficients[j] * x(idx, j);
        sse += (y[idx] - pred) * (y[idx] - pred);
      }
      result.mean_rmse[g] += std::sqrt(sse / static_cast<double>(test_rows.size()));
    }
  }
  for (double& v : result.mean_rmse) v /= static_cast<double>(folds.size());

  // Smallest mean RMSE; ties resolve to the larger penalty (earlier index).
  std::size_t best = 0;
  for (std::size_t g = 1; g < grid_size; ++g)
    if (result.mean_rmse[g] < result.mean_rmse[best]) best = g;
  result.best_index = best;
  result.best_lambda = result.lambdas[best];

  result.fit = lasso_fit(x, y, result.best_lambda);
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (result.fit.coefficients[j] != 0.0) result.support.push_back(j);
  return result;
}

OlsFit post_lasso_ols(const Matrix& x, const Vector& y,
                      const std::vector<std::size_t>& support) {
  return ols_fit(x, y, support);
}

}  // namespace selekta
