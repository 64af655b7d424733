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

#ifndef SELEKTA_FILTERS_HPP_
#define SELEKTA_FILTERS_HPP_

#include <cstddef>
#include <vector>

#include "selekta/matrix.hpp"

namespace selekta {

/// One removal decision of the pairwise correlation filter.
struct CorrelationFilterStep {
  std::size_t first = 0;   // offending pair, first < second
  std::size_t second = 0;
  double correlation = 0.0;
  double mean_abs_first = 0.0;   // mean |r| over the features active
  double mean_abs_second = 0.0;  // at decision time (self excluded)
  std::size_t removed = 0;       // the member that was dropped
};

struct CorrelationFilterResult {
  std::vector<std::size_t> kept;     // ascending feature indices
  std::vector<std::size_t> removed;  // in removal order
  std::vector<CorrelationFilterStep> steps;
};

/// Iteratively removes one member of the most-correlated feature pair whose
/// |r| exceeds `cutoff` until no such pair is left.  The member with the
/// larger mean absolute correlation against the other currently active
/// features is dropped; on a tie, the later one in column order.  `corr`
/// is the feature-feature correlation matrix.
CorrelationFilterResult correlation_filter(const Matrix& corr, double cutoff);

/// Variance decomposition of a linear model: each feature's share is its
/// average R^2 increment over all orderings in which it can be added.
struct RelativeImportance {
  Vector share;          // per feature; shares sum to r2_full
  double r2_full = 0.0;  // R^2 of the all-features fit
  bool rank_deficient_fallback = false;  // some subset needed a min-norm fit
};

/// Exact computation over all 2^p feature subsets (p <= 20).  Subsets with
/// a rank-deficient design are scored with a minimum-norm fit and flagged.
RelativeImportance lmg_importance(const Matrix& x, const Vector& y);

}  // namespace selekta

#endif  // SELEKTA_FILTERS_HPP_
