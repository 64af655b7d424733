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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace oracles {

using selekta::Matrix;
using selekta::Vector;

namespace {

// inv(X'X) for a 3-column design, via the adjugate of the 3x3 Gram matrix.
Matrix gram_inverse_3(const Matrix& x) {
  if (x.cols() != 3) throw std::invalid_argument("oracle supports 3 columns only");
  double g[3][3] = {};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t i = 0; i < x.rows(); ++i) g[a][b] += x(i, a) * x(i, b);

  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  Matrix inv(3, 3);
  inv(0, 0) = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv(0, 1) = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv(0, 2) = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv(1, 0) = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  inv(1, 1) = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv(1, 2) = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv(2, 0) = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  inv(2, 1) = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  inv(2, 2) = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  return inv;
}

}  // namespace

Vector normal_equations_3(const Matrix& x, const Vector& y) {
  Matrix inv = gram_inverse_3(x);
  Vector xty(3, 0.0);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) xty[j] += x(i, j) * y[i];
  Vector beta(3, 0.0);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) beta[j] += inv(j, k) * xty[k];
  return beta;
}

Vector xtx_inverse_diagonal_3(const Matrix& x) {
  Matrix inv = gram_inverse_3(x);
  return {inv(0, 0), inv(1, 1), inv(2, 2)};
}

double r_squared_subset(const Matrix& x, const Vector& y,
                        const std::vector<std::size_t>& subset) {
  const std::size_t n = x.rows();
  const std::size_t m = subset.size();

  Vector xm(m, 0.0);
  double ym = 0.0;
  for (double v : y) ym += v;
  ym /= static_cast<double>(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) xm[j] += x(i, subset[j]);
    xm[j] /= static_cast<double>(n);
  }

  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dy = y[i] - ym;
    syy += dy * dy;
    for (std::size_t r = 0; r < m; ++r) {
      const double dr = x(i, subset[r]) - xm[r];
      a[r][m] += dr * dy;
      for (std::size_t c = 0; c < m; ++c) a[r][c] += dr * (x(i, subset[c]) - xm[c]);
    }
  }
  if (m == 0) return 0.0;

  Vector sxy(m);
  for (std::size_t r = 0; r < m; ++r) sxy[r] = a[r][m];

  // Gaussian elimination with partial pivoting on [Sxx | sxy].
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw std::runtime_error("oracle: singular subset");
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Vector beta(m, 0.0);
  for (std::size_t r = m; r-- > 0;) {
    double acc = a[r][m];
    for (std::size_t c = r + 1; c < m; ++c) acc -= a[r][c] * beta[c];
    beta[r] = acc / a[r][r];
  }

  double explained = 0.0;
  for (std::size_t r = 0; r < m; ++r) explained += beta[r] * sxy[r];
  return explained / syy;
}

Vector importance_by_permutations(const Matrix& x, const Vector& y) {
  const std::size_t p = x.cols();
  std::vector<std::size_t> order(p);
  for (std::size_t j = 0; j < p; ++j) order[j] = j;

  Vector total(p, 0.0);
  std::size_t permutations = 0;
  do {
    std::vector<std::size_t> prefix;
    double previous = 0.0;
    for (std::size_t j : order) {
      prefix.push_back(j);
      const double current = r_squared_subset(x, y, prefix);
      total[j] += current - previous;
      previous = current;
    }
    ++permutations;
  } while (std::next_permutation(order.begin(), order.end()));

  for (double& v : total) v /= static_cast<double>(permutations);
  return total;
}

std::pair<double, Vector> least_squares_subset(const Matrix& x, const Vector& y,
                                               const std::vector<std::size_t>& subset) {
  const std::size_t n = x.rows();
  const std::size_t m = subset.size();

  Vector xm(m, 0.0);
  double ym = 0.0;
  for (double v : y) ym += v;
  ym /= static_cast<double>(n);
  if (m == 0) return {ym, {}};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) xm[j] += x(i, subset[j]);
    xm[j] /= static_cast<double>(n);
  }

  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double dy = y[i] - ym;
    for (std::size_t r = 0; r < m; ++r) {
      const double dr = x(i, subset[r]) - xm[r];
      a[r][m] += dr * dy;
      for (std::size_t c = 0; c < m; ++c) a[r][c] += dr * (x(i, subset[c]) - xm[c]);
    }
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw std::runtime_error("oracle: singular subset");
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Vector beta(m, 0.0);
  for (std::size_t r = m; r-- > 0;) {
    double acc = a[r][m];
    for (std::size_t c = r + 1; c < m; ++c) acc -= a[r][c] * beta[c];
    beta[r] = acc / a[r][r];
  }

  double intercept = ym;
  for (std::size_t j = 0; j < m; ++j) intercept -= beta[j] * xm[j];
  return {intercept, beta};
}

double cv_rmse_subset(const Matrix& x, const Vector& y,
                      const std::vector<std::size_t>& subset,
                      const std::vector<std::vector<std::size_t>>& folds) {
  const std::size_t n = x.rows();
  double total = 0.0;
  for (const std::vector<std::size_t>& held_out : folds) {
    std::vector<bool> in_test(n, false);
    for (std::size_t row : held_out) in_test[row] = true;
    std::vector<std::size_t> train;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_test[i]) train.push_back(i);

    Matrix x_train(train.size(), x.cols());
    Vector y_train(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      y_train[i] = y[train[i]];
      for (std::size_t j = 0; j < x.cols(); ++j) x_train(i, j) = x(train[i], j);
    }
    const auto [intercept, beta] = least_squares_subset(x_train, y_train, subset);

    double ss = 0.0;
    for (std::size_t row : held_out) {
      double pred = intercept;
      for (std::size_t j = 0; j < subset.size(); ++j) pred += beta[j] * x(row, subset[j]);
      ss += (y[row] - pred) * (y[row] - pred);
    }
    total += std::sqrt(ss / static_cast<double>(held_out.size()));
  }
  return total / static_cast<double>(folds.size());
}

namespace {

void enumerate_from(const Matrix& x, const Vector& y,
                    const std::vector<std::vector<std::size_t>>& folds,
                    std::vector<std::size_t>& prefix, std::size_t next,
                    std::vector<std::size_t>& best, double& best_rmse) {
  for (std::size_t j = next; j < x.cols(); ++j) {
    prefix.push_back(j);
    const double rmse = cv_rmse_subset(x, y, prefix, folds);
    if (rmse < best_rmse) {
      best_rmse = rmse;
      best = prefix;
    }
    enumerate_from(x, y, folds, prefix, j + 1, best, best_rmse);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::size_t> best_subset_by_enumeration(
    const Matrix& x, const Vector& y,
    const std::vector<std::vector<std::size_t>>& folds) {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> best;
  double best_rmse = std::numeric_limits<double>::infinity();
  enumerate_from(x, y, folds, prefix, 0, best, best_rmse);
  return best;
}

double pearson_two_columns(const Vector& a, const Vector& b) {
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace oracles
