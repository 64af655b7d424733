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

#ifndef SELEKTA_LINEAR_MODEL_HPP_
#define SELEKTA_LINEAR_MODEL_HPP_

#include <cstddef>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/matrix.hpp"

namespace selekta {

/// Ordinary least squares fit with an estimated intercept.
/// `columns` are indices into the feature matrix the fit was built from;
/// the counted parameter number k is columns.size() + 1.
struct OlsFit {
  std::vector<std::size_t> columns;
  double intercept = 0.0;
  Vector coefficients;  // one slope per entry of `columns`

  double intercept_se = 0.0;
  double intercept_t = 0.0;
  double intercept_p = 1.0;
  Vector std_errors;
  Vector t_values;
  Vector p_values;

  std::size_t n = 0;
  std::size_t k = 0;  // parameters including the intercept
  double rss = 0.0;
  double tss = 0.0;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  double sigma_hat = 0.0;
  double f_statistic = 0.0;  // NaN for an intercept-only fit
  double f_p_value = 1.0;    // NaN for an intercept-only fit

  Vector fitted;
  Vector residuals;
};

/// Fit y on x(:, columns) plus an intercept.  Requires n > columns.size() + 1.
/// An empty `columns` yields the intercept-only model.  Duplicated or
/// collinear columns raise SingularDesignError.
OlsFit ols_fit(const Matrix& x, const Vector& y, const std::vector<std::size_t>& columns);

/// Fit on every column of x.
OlsFit ols_fit_all(const Matrix& x, const Vector& y);

/// Predictions of `fit` on (full-width) feature rows `x`.
Vector predict(const OlsFit& fit, const Matrix& x);

/// First-order autocorrelation diagnostic of a residual series (time order).
/// Throws ArgumentError when the residual sum of squares is zero.
double durbin_watson(const Vector& residuals);

struct InfoCriteria {
  double cp = 0.0;
  double aic = 0.0;
  double bic = 0.0;
};

/// Model-comparison criteria for a fit with `k` counted parameters
/// (slopes + intercept) on `n` rows:
///   cp  = rss / sigma2_full - n + 2 k
///   aic = n ln(2 pi rss / n) + n + 2 (k + 1)
///   bic = n ln(2 pi rss / n) + n + ln(n) (k + 1)
/// The error variance counts as one further parameter in aic/bic;
/// sigma2_full is the residual variance estimate of the all-features fit.
InfoCriteria info_criteria(double rss, std::size_t n, std::size_t k, double sigma2_full);

/// Mean over folds of the held-out RMSE of an OLS fit on x(:, columns).
/// Rows are taken from the already-standardized matrix as-is.
double cv_rmse(const Matrix& x, const Vector& y, const std::vector<std::size_t>& columns,
               const FoldPlan& folds);

}  // namespace selekta

#endif  // SELEKTA_LINEAR_MODEL_HPP_
