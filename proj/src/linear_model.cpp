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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "selekta/errors.hpp"
#include "selekta/stats.hpp"

namespace selekta {

namespace {

Matrix design_with_intercept(const Matrix& x, const std::vector<std::size_t>& columns) {
  Matrix d(x.rows(), columns.size() + 1, 1.0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= x.cols()) throw ArgumentError("ols_fit: column index out of range");
    for (std::size_t i = 0; i < x.rows(); ++i) d(i, j + 1) = x(i, columns[j]);
  }
  return d;
}

}  // namespace

OlsFit ols_fit(const Matrix& x, const Vector& y, const std::vector<std::size_t>& columns) {
  const std::size_t n = x.rows();
  if (y.size() != n) throw ArgumentError("ols_fit: row count mismatch");
  const std::size_t k = columns.size() + 1;
  if (n <= k)
    throw ArgumentError("ols_fit: need more rows than parameters (n=" +
                        std::to_string(n) + ", k=" + std::to_string(k) + ")");

  OlsFit fit;
  fit.columns = columns;
  fit.n = n;
  fit.k = k;

  const Matrix d = design_with_intercept(x, columns);
  const QrLeastSquares qr(d);
  const Vector beta = qr.solve(y);
  fit.intercept = beta[0];
  fit.coefficients.assign(beta.begin() + 1, beta.end());

  fit.fitted = matvec(d, beta);
  fit.residuals.resize(n);
  fit.rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fit.residuals[i] = y[i] - fit.fitted[i];
    fit.rss += fit.residuals[i] * fit.residuals[i];
  }

  const double y_mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  fit.tss = 0.0;
  for (double v : y) fit.tss += (v - y_mean) * (v - y_mean);
  if (fit.tss <= 0.0) throw ArgumentError("ols_fit: response has no variation");

  const auto dn = static_cast<double>(n);
  const auto dk = static_cast<double>(k);
  fit.r_squared = 1.0 - fit.rss / fit.tss;
  fit.adj_r_squared = 1.0 - (1.0 - fit.r_squared) * (dn - 1.0) / (dn - dk);
  const double sigma2 = fit.rss / (dn - dk);
  fit.sigma_hat = std::sqrt(sigma2);

  const Vector gram_inv_diag = qr.xtx_inverse_diagonal();
  fit.intercept_se = std::sqrt(sigma2 * gram_inv_diag[0]);
  fit.intercept_t = fit.intercept_se > 0.0 ? fit.intercept / fit.intercept_se : 0.0;
  fit.intercept_p = student_t_two_sided(fit.intercept_t, dn - dk);

  fit.std_errors.resize(columns.size());
  fit.t_values.resize(columns.size());
  fit.p_values.resize(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    fit.std_errors[j] = std::sqrt(sigma2 * gram_inv_diag[j + 1]);
    fit.t_values[j] =
        fit.std_errors[j] > 0.0 ? fit.coefficients[j] / fit.std_errors[j] : 0.0;
    fit.p_values[j] = student_t_two_sided(fit.t_values[j], dn - dk);
  }

  if (k > 1) {
    fit.f_statistic =
        (fit.r_squared / (dk - 1.0)) / ((1.0 - fit.r_squared) / (dn - dk));
    fit.f_p_value = f_upper_tail(fit.f_statistic, dk - 1.0, dn - dk);
  } else {
    fit.f_statistic = std::numeric_limits<double>::quiet_NaN();
    fit.f_p_value = std::numeric_limits<double>::quiet_NaN();
  }
  return fit;
}

OlsFit ols_fit_all(const Matrix& x, const Vector& y) {
  std::vector<std::size_t> all(x.cols());
  std::iota(all.begin(), all.end(), 0);
  return ols_fit(x, y, all);
}

Vector predict(const OlsFit& fit, const Matrix& x) {
  Vector out(x.rows(), fit.intercept);
  for (std::size_t j = 0; j < fit.columns.size(); ++j) {
    if (fit.columns[j] >= x.cols())
      throw ArgumentError("predict: column index out of range");
    for (std::size_t i = 0; i < x.rows(); ++i)
      out[i] += fit.coefficients[j] * x(i, fit.columns[j]);
  }
  return out;
}

double durbin_watson(const Vector& residuals) {
  if (residuals.size() < 2)
    throw ArgumentError("durbin_watson: need at least two residuals");
  double rss = 0.0;
  for (double e : residuals) rss += e * e;
  if (rss == 0.0)
    throw ArgumentError("durbin_watson: undefined for an exact fit (zero residuals)");
  double diff_ss = 0.0;
  for (std::size_t t = 1; t < residuals.size(); ++t) {
    const double d = residuals[t] - residuals[t - 1];
    diff_ss += d * d;
  }
  return diff_ss / rss;
}

InfoCriteria info_criteria(double rss, std::size_t n, std::size_t k, double sigma2_full) {
  if (rss <= 0.0) throw ArgumentError("info_criteria: rss must be positive");
  if (sigma2_full <= 0.0) throw ArgumentError("info_criteria: sigma2_full must be positive");
  if (n <= k) throw ArgumentError("info_criteria: need n > k");
  const auto dn = static_cast<double>(n);
  const auto dk = static_cast<double>(k);
  InfoCriteria ic;
  ic.cp = rss / sigma2_full - dn + 2.0 * dk;
  const double log_lik_term = dn * std::log(2.0 * M_PI * rss / dn) + dn;
  ic.aic = log_lik_term + 2.0 * (dk + 1.0);
  ic.bic = log_lik_term + std::log(dn) * (dk + 1.0);
  return ic;
}

double cv_rmse(const Matrix& x, const Vector& y, const std::vector<std::size_t>& columns,
               const FoldPlan& folds) {
  const std::size_t n = x.rows();
  if (folds.empty()) throw ArgumentError("cv_rmse: empty fold plan");

  double rmse_sum = 0.0;
  for (const auto& test_rows : folds) {
    std::vector<char> in_test(n, 0);
    for (std::size_t idx : test_rows) {
      if (idx >= n) throw ArgumentError("cv_rmse: fold index out of range");
      in_test[idx] = 1;
    }
    std::vector<std::size_t> train_rows;
    train_rows.reserve(n - test_rows.size());
    for (std::size_t i = 0; i < n; ++i)
      if (!in_test[i]) train_rows.push_back(i);

    const Matrix x_train = x.select_rows(train_rows);
    Vector y_train(train_rows.size());
    for (std::size_t i = 0; i < train_rows.size(); ++i) y_train[i] = y[train_rows[i]];

    const OlsFit fit = ols_fit(x_train, y_train, columns);
    const Matrix x_test = x.select_rows(test_rows);
    const Vector pred = predict(fit, x_test);

    double sse = 0.0;
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      const double e = y[test_rows[i]] - pred[i];
      sse += e * e;
    }
    rmse_sum += std::sqrt(sse / static_cast<double>(test_rows.size()));
  }
  return rmse_sum / static_cast<double>(folds.size());
}

}  // namespace selekta
