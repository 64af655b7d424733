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

#ifndef SELEKTA_SUBSET_SEARCH_HPP_
#define SELEKTA_SUBSET_SEARCH_HPP_

#include <cstddef>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/matrix.hpp"

namespace selekta {

/// One scored candidate subset.
struct SubsetScore {
  std::vector<std::size_t> subset;  // ascending feature indices
  double cv_rmse = 0.0;
  double adj_r2 = 0.0;
  double rss = 0.0;  // in-sample, full-data refit
};

/// Exhaustive search over every non-empty subset.
struct BestSubsetResult {
  std::vector<std::size_t> selected;  // global minimizer of mean CV RMSE
  double cv_rmse = 0.0;
  std::size_t evaluated = 0;          // 2^p - 1
  std::vector<SubsetScore> per_size;  // entry i: size-(i+1) subset with the
                                      // smallest in-sample rss
};

/// Scores all 2^p - 1 subsets by mean held-out RMSE and returns the
/// minimizer; RMSE ties go to the lexicographically smallest index
/// sequence.  Requires p <= 20.
BestSubsetResult best_subset(const Matrix& x, const Vector& y, const FoldPlan& folds);

/// Bidirectional greedy search on AIC, starting from the full model.
enum class StepwiseAction { kStart, kRemove, kAdd };

struct StepwiseStep {
  StepwiseAction action = StepwiseAction::kStart;
  std::size_t feature = 0;  // unused for kStart
  double aic = 0.0;         // after the move
};

struct StepwiseResult {
  std::vector<std::size_t> selected;  // ascending; empty = intercept only
  double aic = 0.0;
  std::vector<StepwiseStep> steps;  // first entry records the start state
};

/// At every step all single additions and removals are scored; the best
/// move is applied while it strictly lowers the AIC.  Equal-AIC moves
/// prefer removals, then the smallest feature index.
StepwiseResult stepwise_aic(const Matrix& x, const Vector& y);

/// Recursive feature elimination ranked by |t| statistics.
struct RfeResult {
  std::vector<std::size_t> selected;  // ascending
  std::size_t size = 0;
  Vector mean_rmse_by_size;  // entry s-1: mean held-out RMSE at size s
  std::vector<std::size_t> elimination_order;  // full-data drop order; the
                                               // last entry survives longest
};

/// Per fold: fit on the training rows, score the held-out rows, drop the
/// slope with the smallest |t| (ties drop the larger index), repeat down
/// to one feature.  The final size minimizes the mean held-out RMSE over
/// `candidate_sizes` (default: every size; ties go to the smaller size);
/// the final set comes from one identical ranking pass over the full data.
RfeResult rfe(const Matrix& x, const Vector& y, const FoldPlan& folds,
              const std::vector<std::size_t>& candidate_sizes = {});

}  // namespace selekta

#endif  // SELEKTA_SUBSET_SEARCH_HPP_
