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

#ifndef SELEKTA_LATENT_HPP_
#define SELEKTA_LATENT_HPP_

#include <cstddef>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/matrix.hpp"

namespace selekta {

/// Principal components of a correlation matrix.
struct PcaModel {
  Vector eigenvalues;  // descending
  Matrix loadings;     // columns = components; sign-fixed so that each
                       // column's largest-magnitude entry is positive
  Vector explained;    // eigenvalue share of total variance, per component
  Vector cumulative;   // running sum of `explained`
};

PcaModel pca_correlation(const Matrix& corr);

/// Component scores of standardized rows: x * loadings.
Matrix pca_scores(const PcaModel& pca, const Matrix& x);

/// Principal-component regression on standardized data.
struct PcrFit {
  PcaModel pca;
  std::size_t components = 0;  // chosen count
  double intercept = 0.0;
  Vector gamma;                // per-component regression slopes
  Vector beta;                 // back-transformed feature-space coefficients
  Vector cv_rmse_by_count;     // mean held-out RMSE, entry i for i+1 components
};

/// Components are extracted once from the full data; cross-validation
/// refits only the regression on the leading score columns.  The count
/// with the smallest mean held-out RMSE wins; ties go to fewer components.
PcrFit pcr_fit(const Matrix& x, const Vector& y, const FoldPlan& folds);

/// Same, with the component count pinned (1..p).
PcrFit pcr_fit_fixed(const Matrix& x, const Vector& y, std::size_t components);

/// Univariate partial least squares, classic NIPALS with deflation.
/// Inputs are standardized columns and a centered response; the model has
/// no intercept.  Extraction stops early (truncated = true) when the
/// residual covariance with the response is exhausted.
struct PlsFit {
  std::size_t components = 0;  // actually extracted
  bool truncated = false;      // fewer than requested
  Vector beta;                 // feature-space coefficients
  Matrix weights;              // p x components
  Matrix x_loadings;           // p x components
  Vector y_loadings;           // one per component
  Matrix scores;               // n x components, mutually orthogonal
};

PlsFit pls1_fit(const Matrix& x, const Vector& y, std::size_t components);

/// Iterative predictor weighting built on PLS: each round fits PLS with a
/// cross-validated component count, turns the coefficients into importances
/// |coefficient| * sd(column) normalized to sum 1, rescales the surviving
/// columns by their importances, and drops features whose importance falls
/// below `drop_threshold`.  Stops when a round drops nothing or after
/// `max_rounds`.  A negative threshold means the default 1 / (10 p).
struct IpwPlsResult {
  std::vector<std::size_t> selected;  // ascending feature indices
  std::size_t rounds = 0;
  Vector importance;  // last round's importances, full width, zeros for
                      // features dropped earlier
  std::vector<std::vector<std::size_t>> active_history;  // set at round entry
};

IpwPlsResult ipw_pls(const Matrix& x, const Vector& y, const FoldPlan& folds,
                     std::size_t max_rounds = 50, double drop_threshold = -1.0);

}  // namespace selekta

#endif  // SELEKTA_LATENT_HPP_
