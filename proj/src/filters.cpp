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

#include "selekta/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "selekta/errors.hpp"

namespace selekta {

namespace {

void check_correlation_matrix(const Matrix& corr) {
  if (corr.rows() != corr.cols())
    throw ArgumentError("correlation_filter: matrix must be square");
  for (std::size_t i = 0; i < corr.rows(); ++i) {
    if (std::abs(corr(i, i) - 1.0) > 1e-9)
      throw ArgumentError("correlation_filter: diagonal must be 1");
    for (std::size_t j = i + 1; j < corr.cols(); ++j) {
      if (std::abs(corr(i, j) - corr(j, i)) > 1e-9)
        throw ArgumentError("correlation_filter: matrix must be symmetric");
      if (std::abs(corr(i, j)) > 1.0 + 1e-9)
        throw ArgumentError("correlation_filter: entries must lie in [-1, 1]");
    }
  }
}

}  // namespace

CorrelationFilterResult correlation_filter(const Matrix& corr, double cutoff) {
  check_correlation_matrix(corr);
  if (!(cutoff > 0.0) || !(cutoff < 1.0))
    throw ArgumentError("correlation_filter: cutoff must lie in (0, 1)");

  const std::size_t p = corr.rows();
  std::vector<char> active(p, 1);
  CorrelationFilterResult result;

  for (;;) {
    // Worst remaining pair above the cutoff; ties go to lower indices.
    std::size_t best_a = p, best_b = p;
    double best_abs = cutoff;
    for (std::size_t a = 0; a < p; ++a) {
      if (!active[a]) continue;
      for (std::size_t b = a + 1; b < p; ++b) {
        if (!active[b]) continue;
        const double r = std::abs(corr(a, b));
        if (r > best_abs) {
          best_abs = r;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a == p) break;

    auto mean_abs = [&](std::size_t j) {
      double acc = 0.0;
      std::size_t count = 0;
      for (std::size_t other = 0; other < p; ++other) {
        if (!active[other] || other == j) continue;
        acc += std::abs(corr(j, other));
        ++count;
      }
      return count == 0 ? 0.0 : acc / static_cast<double>(count);
    };

    CorrelationFilterStep step;
    step.first = best_a;
    step.second = best_b;
    step.correlation = corr(best_a, best_b);
    step.mean_abs_first = mean_abs(best_a);
    step.mean_abs_second = mean_abs(best_b);
    // Drop the member more entangled with the rest; ties drop the later one.
    step.removed =
        step.mean_abs_first > step.mean_abs_second ? best_a : best_b;
    active[step.removed] = 0;
    result.removed.push_back(step.removed);
    result.steps.push_back(step);
  }

  for (std::size_t j = 0; j < p; ++j)
    if (active[j]) result.kept.push_back(j);
  return result;
}

namespace {

// R^2 of the least-squares fit (with intercept) restricted to the subset
// encoded by `mask`, from precomputed centered moments.  Falls back to a
// minimum-norm solution via an eigendecomposition when the subset's gram
// matrix is rank deficient; `fallback` is set when that happens.
class SubsetR2 {
 public:
  SubsetR2(const Matrix& x, const Vector& y) : p_(x.cols()) {
    const std::size_t n = x.rows();
    if (n < 3) throw ArgumentError("lmg_importance: need at least 3 rows");

    Vector x_mean(p_, 0.0);
    for (std::size_t j = 0; j < p_; ++j) {
      for (std::size_t i = 0; i < n; ++i) x_mean[j] += x(i, j);
      x_mean[j] /= static_cast<double>(n);
    }
    double y_mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);

    sxx_ = Matrix(p_, p_, 0.0);
    sxy_.assign(p_, 0.0);
    syy_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dy = y[i] - y_mean;
      syy_ += dy * dy;
      for (std::size_t a = 0; a < p_; ++a) {
        const double da = x(i, a) - x_mean[a];
        sxy_[a] += da * dy;
        for (std::size_t b = a; b < p_; ++b)
          sxx_(a, b) += da * (x(i, b) - x_mean[b]);
      }
    }
    for (std::size_t a = 0; a < p_; ++a)
      for (std::size_t b = 0; b < a; ++b) sxx_(a, b) = sxx_(b, a);
    if (syy_ <= 0.0) throw ArgumentError("lmg_importance: response has no variation");
  }

  double operator()(std::uint32_t mask, bool* fallback) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < p_; ++j)
      if (mask & (1u << j)) idx.push_back(j);
    if (idx.empty()) return 0.0;
    const std::size_t m = idx.size();

    // Cholesky of the subset gram matrix.
    Matrix l(m, m, 0.0);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < m; ++i) max_diag = std::max(max_diag, sxx_(idx[i], idx[i]));
    bool singular = false;
    for (std::size_t i = 0; i < m && !singular; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double acc = sxx_(idx[i], idx[j]);
        for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
        if (i == j) {
          if (acc <= 1e-10 * max_diag) {
            singular = true;
            break;
          }
          l(i, i) = std::sqrt(acc);
        } else {
          l(i, j) = acc / l(j, j);
        }
      }
    }

    Vector b(m, 0.0);
    if (!singular) {
      // Solve L L' b = sxy.
      for (std::size_t i = 0; i < m; ++i) {
        double acc = sxy_[idx[i]];
        for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * b[k];
        b[i] = acc / l(i, i);
      }
      for (std::size_t ii = m; ii-- > 0;) {
        double acc = b[ii];
        for (std::size_t k = ii + 1; k < m; ++k) acc -= l(k, ii) * b[k];
        b[ii] = acc / l(ii, ii);
      }
    } else {
      // Minimum-norm solution through the spectral pseudo-inverse.
      *fallback = true;
      Matrix sub(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sub(i, j) = sxx_(idx[i], idx[j]);
      const SymmetricEigen eig = eig_symmetric(sub);
      const double tol = 1e-12 * std::max(1.0, std::abs(eig.values[0]));
      Vector vty(m, 0.0);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < m; ++i) vty[c] += eig.vectors(i, c) * sxy_[idx[i]];
      for (std::size_t c = 0; c < m; ++c)
        vty[c] = eig.values[c] > tol ? vty[c] / eig.values[c] : 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) b[i] += eig.vectors(i, c) * vty[c];
    }

    double explained = 0.0;
    for (std::size_t i = 0; i < m; ++i) explained += b[i] * sxy_[idx[i]];
    return explained / syy_;
  }

  std::size_t p() const { return p_; }

 private:
  std::size_t p_;
  Matrix sxx_;
  Vector sxy_;
  double syy_ = 0.0;
};

}  // namespace

RelativeImportance lmg_importance(const Matrix& x, const Vector& y) {
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("lmg_importance: need at least one feature");
  if (p > 20) throw ArgumentError("lmg_importance: limited to 20 features");
  if (y.size() != x.rows()) throw ArgumentError("lmg_importance: row count mismatch");

  RelativeImportance result;
  SubsetR2 r2_of(x, y);

  const std::uint32_t full = (1u << p) - 1u;
  std::vector<double> r2(static_cast<std::size_t>(full) + 1, 0.0);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    r2[mask] = r2_of(mask, &result.rank_deficient_fallback);
  result.r2_full = r2[full];

  // Order weights: w(s) = s! (p-s-1)! / p!, built by recurrence.
  Vector weight(p, 0.0);
  weight[0] = 1.0 / static_cast<double>(p);
  for (std::size_t s = 1; s < p; ++s)
    weight[s] = weight[s - 1] * static_cast<double>(s) / static_cast<double>(p - s);

  result.share.assign(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    const std::uint32_t bit = 1u << j;
    double acc = 0.0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (mask & bit) continue;
      acc += weight[static_cast<std::size_t>(__builtin_popcount(mask))] *
             (r2[mask | bit] - r2[mask]);
    }
    result.share[j] = acc;
  }
  return result;
}

}  // namespace selekta
