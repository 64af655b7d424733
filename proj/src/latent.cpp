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

#include "selekta/latent.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "selekta/errors.hpp"
#include "selekta/linear_model.hpp"

namespace selekta {

namespace {

// Eigenvalues at or below this fraction of the largest are treated as
// numerically null when counting usable components.
constexpr double kComponentFloor = 1e-10;

double sample_sd(const Vector& v) {
  const std::size_t n = v.size();
  double mean = 0.0;
  for (double value : v) mean += value;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double value : v) ss += (value - mean) * (value - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

std::vector<std::size_t> leading_indices(std::size_t count) {
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  return idx;
}

}  // namespace

PcaModel pca_correlation(const Matrix& corr) {
  if (corr.rows() == 0 || corr.rows() != corr.cols()) {
    throw ArgumentError("pca_correlation: matrix must be square and non-empty");
  }
  SymmetricEigen eig = eig_symmetric(corr);
  const std::size_t p = corr.rows();

  PcaModel model;
  model.eigenvalues = eig.values;
  model.loadings = eig.vectors;

  // Fix each component's sign: the largest-magnitude loading becomes
  // positive, so results do not depend on eigensolver internals.
  for (std::size_t a = 0; a < p; ++a) {
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double mag = std::fabs(model.loadings(j, a));
      if (mag > best) {
        best = mag;
        pivot = j;
      }
    }
    if (model.loadings(pivot, a) < 0.0) {
      for (std::size_t j = 0; j < p; ++j) model.loadings(j, a) = -model.loadings(j, a);
    }
  }

  double total = 0.0;
  for (double value : model.eigenvalues) total += value;
  model.explained.resize(p);
  model.cumulative.resize(p);
  double running = 0.0;
  for (std::size_t a = 0; a < p; ++a) {
    model.explained[a] = model.eigenvalues[a] / total;
    running += model.explained[a];
    model.cumulative[a] = running;
  }
  return model;
}

Matrix pca_scores(const PcaModel& pca, const Matrix& x) {
  if (x.cols() != pca.loadings.rows()) {
    throw ArgumentError("pca_scores: column count does not match the model");
  }
  return matmul(x, pca.loadings);
}

namespace {

PcrFit pcr_common(const Matrix& x, const Vector& y, const FoldPlan* folds,
                  std::size_t fixed_components) {
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("pcr: at least one feature required");
  if (y.size() != x.rows()) throw ArgumentError("pcr: row count mismatch");

  PcrFit fit;
  fit.pca = pca_correlation(pearson_correlation(x));
  const Matrix scores = pca_scores(fit.pca, x);

  // Components whose eigenvalue has collapsed to numerical zero carry no
  // usable signal and would only destabilize the score regression.
  std::size_t usable = 0;
  const double floor = kComponentFloor * fit.pca.eigenvalues[0];
  while (usable < p && fit.pca.eigenvalues[usable] > floor) ++usable;
  if (usable == 0) throw ArgumentError("pcr: no usable components");

  if (folds != nullptr) {
    fit.cv_rmse_by_count.resize(usable);
    std::size_t best = 0;
    for (std::size_t count = 1; count <= usable; ++count) {
      const double rmse = cv_rmse(scores, y, leading_indices(count), *folds);
      fit.cv_rmse_by_count[count - 1] = rmse;
      if (rmse < fit.cv_rmse_by_count[best]) best = count - 1;
    }
    fit.components = best + 1;
  } else {
    if (fixed_components < 1 || fixed_components > usable) {
      throw ArgumentError("pcr: component count must be in 1.." + std::to_string(usable));
    }
    fit.components = fixed_components;
  }

  const OlsFit regression = ols_fit(scores, y, leading_indices(fit.components));
  fit.intercept = regression.intercept;
  fit.gamma = regression.coefficients;
  fit.beta.assign(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double sum = 0.0;
    for (std::size_t a = 0; a < fit.components; ++a) {
      sum += fit.pca.loadings(j, a) * fit.gamma[a];
    }
    fit.beta[j] = sum;
  }
  return fit;
}

}  // namespace

PcrFit pcr_fit(const Matrix& x, const Vector& y, const FoldPlan& folds) {
  return pcr_common(x, y, &folds, 0);
}

PcrFit pcr_fit_fixed(const Matrix& x, const Vector& y, std::size_t components) {
  return pcr_common(x, y, nullptr, components);
}

PlsFit pls1_fit(const Matrix& x, const Vector& y, std::size_t components) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("pls1_fit: at least one feature required");
  if (y.size() != n) throw ArgumentError("pls1_fit: row count mismatch");
  if (components < 1 || components > p) {
    throw ArgumentError("pls1_fit: component count must be in 1.." + std::to_string(p));
  }

  Matrix e = x;      // deflated predictor block
  Vector f = y;      // deflated response
  Matrix weights(p, components);
  Matrix x_loadings(p, components);
  Vector y_loadings(components, 0.0);
  Matrix scores(n, components);

  // Scale-aware floor: covariance below this is numerical silence.
  double e_frob = 0.0;
  for (double value : e.data()) e_frob += value * value;
  double f_norm = 0.0;
  for (double value : f) f_norm += value * value;
  const double tiny = 1e-13 * std::sqrt(e_frob) * std::sqrt(f_norm);

  std::size_t extracted = 0;
  for (std::size_t a = 0; a < components; ++a) {
    Vector w(p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) w[j] += e(i, j) * f[i];
    }
    double w_norm = std::sqrt(dot(w, w));
    if (!(w_norm > tiny)) break;  // residual covariance exhausted
    for (double& value : w) value /= w_norm;

    Vector t = matvec(e, w);
    const double tt = dot(t, t);
    if (!(tt > tiny * tiny)) break;

    Vector p_load(p, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) p_load[j] += e(i, j) * t[i];
    }
    for (double& value : p_load) value /= tt;
    const double q = dot(f, t) / tt;

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) e(i, j) -= t[i] * p_load[j];
      f[i] -= q * t[i];
    }

    for (std::size_t j = 0; j < p; ++j) {
      weights(j, a) = w[j];
      x_loadings(j, a) = p_load[j];
    }
    y_loadings[a] = q;
    for (std::size_t i = 0; i < n; ++i) scores(i, a) = t[i];
    ++extracted;
  }

  PlsFit fit;
  fit.components = extracted;
  fit.truncated = extracted < components;
  fit.beta.assign(p, 0.0);
  if (extracted > 0) {
    const std::vector<std::size_t> keep = leading_indices(extracted);
    fit.weights = weights.select_cols(keep);
    fit.x_loadings = x_loadings.select_cols(keep);
    fit.y_loadings.assign(y_loadings.begin(), y_loadings.begin() + static_cast<long>(extracted));
    fit.scores = scores.select_cols(keep);

    // beta = W (P'W)^{-1} q
    const Matrix ptw = matmul(transpose(fit.x_loadings), fit.weights);
    const Vector z = qr_least_squares(ptw, fit.y_loadings);
    fit.beta = matvec(fit.weights, z);
  } else {
    fit.weights = Matrix(p, 0);
    fit.x_loadings = Matrix(p, 0);
    fit.y_loadings.clear();
    fit.scores = Matrix(n, 0);
  }
  return fit;
}

namespace {

// Mean held-out RMSE of a PLS fit with `components` factors on z.
double pls_cv_rmse(const Matrix& z, const Vector& y, const FoldPlan& folds,
                   std::size_t components) {
  const std::size_t n = z.rows();
  double total = 0.0;
  for (const std::vector<std::size_t>& held_out : folds) {
    std::vector<bool> in_test(n, false);
    for (std::size_t row : held_out) in_test[row] = true;
    std::vector<std::size_t> train;
    train.reserve(n - held_out.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_test[i]) train.push_back(i);
    }
    const Matrix z_train = z.select_rows(train);
    Vector y_train(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) y_train[i] = y[train[i]];

    const PlsFit fit = pls1_fit(z_train, y_train, components);
    double ss = 0.0;
    for (std::size_t row : held_out) {
      double pred = 0.0;
      for (std::size_t j = 0; j < z.cols(); ++j) pred += z(row, j) * fit.beta[j];
      const double diff = y[row] - pred;
      ss += diff * diff;
    }
    total += std::sqrt(ss / static_cast<double>(held_out.size()));
  }
  return total / static_cast<double>(folds.size());
}

}  // namespace

IpwPlsResult ipw_pls(const Matrix& x, const Vector& y, const FoldPlan& folds,
                     std::size_t max_rounds, double drop_threshold) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("ipw_pls: at least one feature required");
  if (n < 2 || y.size() != n) throw ArgumentError("ipw_pls: need at least two matching rows");
  if (folds.empty()) throw ArgumentError("ipw_pls: fold plan is empty");
  if (max_rounds == 0) throw ArgumentError("ipw_pls: max_rounds must be positive");
  if (drop_threshold < 0.0) drop_threshold = 1.0 / (10.0 * static_cast<double>(p));

  const double y_sd = sample_sd(y);

  std::vector<std::size_t> active(p);
  for (std::size_t j = 0; j < p; ++j) active[j] = j;
  Vector scale(p, 1.0);

  IpwPlsResult result;
  result.importance.assign(p, 0.0);

  for (std::size_t round = 0; round < max_rounds; ++round) {
    result.active_history.push_back(active);
    result.rounds = round + 1;

    Matrix z(n, active.size());
    for (std::size_t c = 0; c < active.size(); ++c) {
      const std::size_t j = active[c];
      for (std::size_t i = 0; i < n; ++i) z(i, c) = x(i, j) * scale[j];
    }

    // Component count by cross-validation, smallest count on ties.
    std::size_t best_count = 1;
    double best_rmse = pls_cv_rmse(z, y, folds, 1);
    for (std::size_t count = 2; count <= active.size(); ++count) {
      const double rmse = pls_cv_rmse(z, y, folds, count);
      if (rmse < best_rmse) {
        best_rmse = rmse;
        best_count = count;
      }
    }

    const PlsFit fit = pls1_fit(z, y, best_count);
    Vector raw(active.size(), 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < active.size(); ++c) {
      raw[c] = std::fabs(fit.beta[c]) * sample_sd(z.col(c));
      total += raw[c];
    }
    if (!(total > 1e-12 * y_sd)) {
      throw EmptySelectionError("ipw_pls: no feature carries any importance");
    }

    std::fill(result.importance.begin(), result.importance.end(), 0.0);
    std::vector<std::size_t> survivors;
    survivors.reserve(active.size());
    for (std::size_t c = 0; c < active.size(); ++c) {
      const double share = raw[c] / total;
      result.importance[active[c]] = share;
      if (share >= drop_threshold) survivors.push_back(active[c]);
    }
    if (survivors.empty()) {
      throw EmptySelectionError("ipw_pls: every feature fell below the importance threshold");
    }

    double top = 0.0;
    for (std::size_t j : survivors) {
      scale[j] *= result.importance[j];
      top = std::max(top, scale[j]);
    }
    // Only relative column scales matter to the next fit; renormalizing
    // the largest back to 1 keeps the iteration away from underflow.
    for (std::size_t j : survivors) scale[j] /= top;

    if (survivors.size() == active.size()) break;  // set is stable
    active = std::move(survivors);
  }

  result.selected = active;
  return result;
}

}  // namespace selekta
