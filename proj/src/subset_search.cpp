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

#include "selekta/subset_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "selekta/errors.hpp"
#include "selekta/linear_model.hpp"

namespace selekta {

namespace {

std::vector<std::size_t> mask_to_indices(std::size_t mask, std::size_t p) {
  std::vector<std::size_t> indices;
  for (std::size_t j = 0; j < p; ++j) {
    if (mask & (std::size_t{1} << j)) indices.push_back(j);
  }
  return indices;
}

double model_aic(const Matrix& x, const Vector& y, const std::vector<std::size_t>& columns) {
  const OlsFit fit = ols_fit(x, y, columns);
  // Only the aic member is read; the full-model variance slot feeds Cp alone.
  return info_criteria(fit.rss, fit.n, fit.k, 1.0).aic;
}

/// Index of the weakest slope by |t|; equal statistics drop the larger
/// feature index first.
std::size_t weakest_column(const OlsFit& fit) {
  std::size_t weakest = 0;
  for (std::size_t c = 1; c < fit.columns.size(); ++c) {
    if (std::fabs(fit.t_values[c]) <= std::fabs(fit.t_values[weakest])) weakest = c;
  }
  return weakest;
}

}  // namespace

BestSubsetResult best_subset(const Matrix& x, const Vector& y, const FoldPlan& folds) {
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("best_subset: at least one feature required");
  if (p > 20) throw ArgumentError("best_subset: exhaustive search supports at most 20 features");

  BestSubsetResult result;
  result.per_size.assign(p, SubsetScore{});
  std::vector<bool> size_seen(p, false);
  double best_rmse = std::numeric_limits<double>::infinity();

  const std::size_t total = (std::size_t{1} << p) - 1;
  result.evaluated = total;
  for (std::size_t mask = 1; mask <= total; ++mask) {
    const std::vector<std::size_t> subset = mask_to_indices(mask, p);
    const double rmse = cv_rmse(x, y, subset, folds);
    const OlsFit fit = ols_fit(x, y, subset);

    if (rmse < best_rmse ||
        (rmse == best_rmse &&
         std::lexicographical_compare(subset.begin(), subset.end(),
                                      result.selected.begin(), result.selected.end()))) {
      best_rmse = rmse;
      result.selected = subset;
      result.cv_rmse = rmse;
    }

    SubsetScore& slot = result.per_size[subset.size() - 1];
    const bool better_rss =
        !size_seen[subset.size() - 1] || fit.rss < slot.rss ||
        (fit.rss == slot.rss &&
         std::lexicographical_compare(subset.begin(), subset.end(),
                                      slot.subset.begin(), slot.subset.end()));
    if (better_rss) {
      slot.subset = subset;
      slot.cv_rmse = rmse;
      slot.adj_r2 = fit.adj_r_squared;
      slot.rss = fit.rss;
      size_seen[subset.size() - 1] = true;
    }
  }
  return result;
}

StepwiseResult stepwise_aic(const Matrix& x, const Vector& y) {
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("stepwise_aic: at least one feature required");

  std::vector<std::size_t> current(p);
  for (std::size_t j = 0; j < p; ++j) current[j] = j;
  double current_aic = model_aic(x, y, current);

  StepwiseResult result;
  result.steps.push_back({StepwiseAction::kStart, 0, current_aic});

  for (;;) {
    StepwiseAction best_action = StepwiseAction::kStart;
    std::size_t best_feature = 0;
    double best_aic = current_aic;

    auto consider = [&](StepwiseAction action, std::size_t feature, double aic) {
      const bool better =
          aic < best_aic ||
          (aic == best_aic && best_action != StepwiseAction::kStart &&
           (static_cast<int>(action) < static_cast<int>(best_action) ||
            (action == best_action && feature < best_feature)));
      if (better) {
        best_action = action;
        best_feature = feature;
        best_aic = aic;
      }
    };

    for (std::size_t j : current) {
      std::vector<std::size_t> candidate;
      candidate.reserve(current.size() - 1);
      for (std::size_t k : current) {
        if (k != j) candidate.push_back(k);
      }
      consider(StepwiseAction::kRemove, j, model_aic(x, y, candidate));
    }
    for (std::size_t j = 0; j < p; ++j) {
      if (std::find(current.begin(), current.end(), j) != current.end()) continue;
      std::vector<std::size_t> candidate = current;
      candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), j), j);
      consider(StepwiseAction::kAdd, j, model_aic(x, y, candidate));
    }

    if (best_action == StepwiseAction::kStart || best_aic >= current_aic) break;

    if (best_action == StepwiseAction::kRemove) {
      current.erase(std::find(current.begin(), current.end(), best_feature));
    } else {
      current.insert(std::lower_bound(current.begin(), current.end(), best_feature),
                     best_feature);
    }
    current_aic = best_aic;
    result.steps.push_back({best_action, best_feature, best_aic});
  }

  result.selected = current;
  result.aic = current_aic;
  return result;
}

RfeResult rfe(const Matrix& x, const Vector& y, const FoldPlan& folds,
              const std::vector<std::size_t>& candidate_sizes) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("rfe: at least one feature required");
  for (std::size_t size : candidate_sizes) {
    if (size < 1 || size > p) throw ArgumentError("rfe: candidate size out of range");
  }

  RfeResult result;
  result.mean_rmse_by_size.assign(p, 0.0);

  for (const std::vector<std::size_t>& held_out : folds) {
    std::vector<bool> in_test(n, false);
    for (std::size_t row : held_out) in_test[row] = true;
    std::vector<std::size_t> train;
    train.reserve(n - held_out.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_test[i]) train.push_back(i);
    }
    const Matrix x_train = x.select_rows(train);
    Vector y_train(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) y_train[i] = y[train[i]];

    std::vector<std::size_t> active(p);
    for (std::size_t j = 0; j < p; ++j) active[j] = j;
    for (std::size_t size = p; size >= 1; --size) {
      const OlsFit fit = ols_fit(x_train, y_train, active);
      double ss = 0.0;
      for (std::size_t row : held_out) {
        double pred = fit.intercept;
        for (std::size_t c = 0; c < active.size(); ++c) {
          pred += fit.coefficients[c] * x(row, active[c]);
        }
        const double diff = y[row] - pred;
        ss += diff * diff;
      }
      result.mean_rmse_by_size[size - 1] +=
          std::sqrt(ss / static_cast<double>(held_out.size()));
      if (size > 1) active.erase(active.begin() + static_cast<std::ptrdiff_t>(weakest_column(fit)));
    }
  }
  for (double& value : result.mean_rmse_by_size) value /= static_cast<double>(folds.size());

  std::vector<std::size_t> sizes = candidate_sizes;
  if (sizes.empty()) {
    sizes.resize(p);
    for (std::size_t s = 1; s <= p; ++s) sizes[s - 1] = s;
  } else {
    std::sort(sizes.begin(), sizes.end());
  }
  std::size_t best_size = sizes[0];
  for (std::size_t size : sizes) {
    if (result.mean_rmse_by_size[size - 1] < result.mean_rmse_by_size[best_size - 1]) {
      best_size = size;
    }
  }
  result.size = best_size;

  // One ranking pass over the full data defines the nested subset family.
  std::vector<std::size_t> active(p);
  for (std::size_t j = 0; j < p; ++j) active[j] = j;
  while (active.size() > 1) {
    const OlsFit fit = ols_fit(x, y, active);
    const std::size_t weakest = weakest_column(fit);
    result.elimination_order.push_back(active[weakest]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(weakest));
  }
  result.elimination_order.push_back(active[0]);

  result.selected.assign(result.elimination_order.end() - static_cast<std::ptrdiff_t>(best_size),
                         result.elimination_order.end());
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

}  // namespace selekta
