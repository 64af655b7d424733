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

#include "selekta/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "selekta/errors.hpp"
#include "selekta/stats.hpp"

namespace selekta {

namespace {

struct TreeBuilder {
  const Matrix& x;
  const Vector& y;
  std::size_t m_try;
  std::size_t min_node_size;
  RngStream rng;
  std::vector<TreeNode> nodes;

  std::size_t build(std::vector<std::size_t>& rows) {
    const std::size_t m = rows.size();
    double mean = 0.0;
    bool constant = true;
    for (std::size_t r : rows) {
      mean += y[r];
      constant = constant && y[r] == y[rows.front()];
    }
    mean /= static_cast<double>(m);

    const std::size_t index = nodes.size();
    nodes.push_back(TreeNode{});
    nodes[index].value = mean;
    if (m < 2 * min_node_size || constant) return index;

    // Sample m_try distinct features, considered in ascending order so that
    // cost ties fall to the lowest feature index.
    const std::size_t p = x.cols();
    std::vector<std::size_t> pool(p);
    for (std::size_t j = 0; j < p; ++j) pool[j] = j;
    for (std::size_t i = 0; i < m_try; ++i) {
      const std::size_t pick = i + rng.uniform_below(p - i);
      std::swap(pool[i], pool[pick]);
    }
    std::vector<std::size_t> candidates(pool.begin(),
                                        pool.begin() + static_cast<std::ptrdiff_t>(m_try));
    std::sort(candidates.begin(), candidates.end());

    double best_cost = std::numeric_limits<double>::infinity();
    std::size_t best_feature = 0;
    double best_threshold = 0.0;
    bool found = false;

    std::vector<std::pair<double, double>> ordered(m);  // (feature value, y)
    for (std::size_t f : candidates) {
      for (std::size_t i = 0; i < m; ++i) ordered[i] = {x(rows[i], f), y[rows[i]]};
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      double sy_left = 0.0, syy_left = 0.0;
      double sy_all = 0.0, syy_all = 0.0;
      for (const auto& [value, target] : ordered) {
        sy_all += target;
        syy_all += target * target;
      }
      for (std::size_t i = 1; i < m; ++i) {
        sy_left += ordered[i - 1].second;
        syy_left += ordered[i - 1].second * ordered[i - 1].second;
        if (ordered[i - 1].first == ordered[i].first) continue;  // not a boundary
        const std::size_t n_left = i;
        const std::size_t n_right = m - i;
        if (n_left < min_node_size) continue;
        if (n_right < min_node_size) break;

        const double sy_right = sy_all - sy_left;
        const double syy_right = syy_all - syy_left;
        const double cost =
            (syy_left - sy_left * sy_left / static_cast<double>(n_left)) +
            (syy_right - sy_right * sy_right / static_cast<double>(n_right));
        if (cost < best_cost) {
          best_cost = cost;
          best_feature = f;
          double threshold = 0.5 * (ordered[i - 1].first + ordered[i].first);
          // Midpoints of adjacent doubles can round onto an endpoint; pin
          // the threshold below the right block so the partition is exact.
          if (!(threshold < ordered[i].first)) threshold = ordered[i - 1].first;
          best_threshold = threshold;
          found = true;
        }
      }
    }
    if (!found) return index;

    std::vector<std::size_t> left_rows, right_rows;
    left_rows.reserve(m);
    right_rows.reserve(m);
    for (std::size_t r : rows) {
      (x(r, best_feature) <= best_threshold ? left_rows : right_rows).push_back(r);
    }
    const std::size_t left = build(left_rows);
    const std::size_t right = build(right_rows);
    nodes[index].is_leaf = false;
    nodes[index].feature = best_feature;
    nodes[index].threshold = best_threshold;
    nodes[index].left = left;
    nodes[index].right = right;
    return index;
  }
};

double predict_row(const RegressionTree& tree, const double* row) {
  std::size_t at = 0;
  while (!tree.nodes[at].is_leaf) {
    at = row[tree.nodes[at].feature] <= tree.nodes[at].threshold ? tree.nodes[at].left
                                                                 : tree.nodes[at].right;
  }
  return tree.nodes[at].value;
}

}  // namespace

double tree_predict(const RegressionTree& tree, const Matrix& x, std::size_t row) {
  return predict_row(tree, x.data().data() + row * x.cols());
}

Vector forest_predict(const ForestModel& model, const Matrix& x) {
  Vector out(x.rows(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double sum = 0.0;
    for (const RegressionTree& tree : model.trees) sum += tree_predict(tree, x, i);
    out[i] = sum / static_cast<double>(model.trees.size());
  }
  return out;
}

ForestModel forest_fit(const Matrix& x, const Vector& y, std::size_t n_trees,
                       std::size_t m_try, std::size_t min_node_size,
                       const RngStream& rng) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("forest_fit: at least one feature required");
  if (y.size() != n) throw ArgumentError("forest_fit: row count mismatch");
  if (n_trees == 0) throw ArgumentError("forest_fit: need at least one tree");
  if (min_node_size == 0) throw ArgumentError("forest_fit: min_node_size must be positive");
  if (n < min_node_size) {
    throw ArgumentError("forest_fit: need at least min_node_size rows");
  }
  if (m_try == 0) m_try = std::max<std::size_t>(1, p / 3);
  if (m_try > p) throw ArgumentError("forest_fit: m_try exceeds the feature count");

  ForestModel model;
  model.m_try = m_try;
  model.min_node_size = min_node_size;
  model.trees.resize(n_trees);
  model.bootstrap.resize(n_trees);
  model.oob.resize(n_trees);

  for (std::size_t t = 0; t < n_trees; ++t) {
    RngStream stream = rng.split(t);
    std::vector<std::size_t> sample(n);
    std::vector<bool> drawn(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      sample[i] = static_cast<std::size_t>(stream.uniform_below(n));
      drawn[sample[i]] = true;
    }
    model.bootstrap[t] = sample;
    for (std::size_t i = 0; i < n; ++i) {
      if (!drawn[i]) model.oob[t].push_back(i);
    }

    TreeBuilder builder{x, y, m_try, min_node_size, stream, {}};
    builder.build(sample);
    model.trees[t].nodes = std::move(builder.nodes);
  }
  return model;
}

PermutationImportance permutation_importance(const ForestModel& model, const Matrix& x,
                                             const Vector& y, const RngStream& rng) {
  const std::size_t p = x.cols();
  PermutationImportance result;
  result.z_scores.assign(p, 0.0);

  std::vector<Vector> deltas(p);  // per feature, one entry per usable tree
  for (std::size_t t = 0; t < model.trees.size(); ++t) {
    const std::vector<std::size_t>& oob = model.oob[t];
    if (oob.empty()) {
      ++result.skipped_trees;
      continue;
    }
    const std::size_t m = oob.size();
    RngStream stream = rng.split(t);

    Matrix block(m, p);
    double base_mse = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < p; ++j) block(i, j) = x(oob[i], j);
      const double diff = y[oob[i]] - predict_row(model.trees[t], &block.data()[i * p]);
      base_mse += diff * diff;
    }
    base_mse /= static_cast<double>(m);

    std::vector<std::size_t> order(m);
    Vector saved(m);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        order[i] = i;
        saved[i] = block(i, j);
      }
      stream.shuffle(order);
      for (std::size_t i = 0; i < m; ++i) block(i, j) = saved[order[i]];

      double mse = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double diff = y[oob[i]] - predict_row(model.trees[t], &block.data()[i * p]);
        mse += diff * diff;
      }
      mse /= static_cast<double>(m);
      deltas[j].push_back(mse - base_mse);

      for (std::size_t i = 0; i < m; ++i) block(i, j) = saved[i];
    }
  }

  const std::size_t used = model.trees.size() - result.skipped_trees;
  if (used == 0) throw ArgumentError("permutation_importance: no out-of-bag rows in any tree");

  for (std::size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (double d : deltas[j]) mean += d;
    mean /= static_cast<double>(used);
    double var = 0.0;
    for (double d : deltas[j]) var += (d - mean) * (d - mean);
    const double sd = used > 1 ? std::sqrt(var / static_cast<double>(used - 1)) : 0.0;
    if (sd > 0.0) {
      result.z_scores[j] = mean / sd;
    } else {
      // sd of 0 with nonzero mean means every tree moved identically; keep
      // the sign but make the magnitude dominate any finite score.
      result.z_scores[j] =
          mean == 0.0 ? 0.0
                      : std::copysign(std::numeric_limits<double>::infinity(), mean);
    }
  }
  return result;
}

BorutaResult boruta(const Matrix& x, const Vector& y, const BorutaConfig& config,
                    const RngStream& rng) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (p == 0) throw ArgumentError("boruta: at least one feature required");
  if (y.size() != n) throw ArgumentError("boruta: row count mismatch");
  if (config.max_runs == 0) throw ArgumentError("boruta: max_runs must be positive");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw ArgumentError("boruta: alpha must lie in (0, 1)");
  }

  BorutaResult result;
  result.alpha = config.alpha;
  result.status.assign(p, BorutaStatus::kTentative);
  result.hits.assign(p, 0);
  result.tested.assign(p, 0);

  for (std::size_t run = 0; run < config.max_runs; ++run) {
    std::size_t undecided = 0;
    for (std::size_t j = 0; j < p; ++j) {
      if (result.status[j] == BorutaStatus::kTentative) ++undecided;
    }
    if (undecided == 0) break;

    RngStream run_rng = rng.split(run);

    // Real columns first, then one freshly shuffled shadow per real column.
    // Decided features keep their columns, so the shadow benchmark stays at
    // full strength for the whole run and the design never depends on the
    // decision history.
    Matrix design(n, 2 * p);
    std::vector<std::size_t> perm(n);
    for (std::size_t c = 0; c < p; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        design(i, c) = x(i, c);
        perm[i] = i;
      }
      run_rng.shuffle(perm);
      for (std::size_t i = 0; i < n; ++i) design(i, p + c) = x(perm[i], c);
    }

    const std::size_t m_try = std::max<std::size_t>(1, (2 * p) / 3);
    const ForestModel forest = forest_fit(design, y, config.n_trees, m_try,
                                          config.min_node_size, run_rng.split(1));
    const Vector importance =
        permutation_importance(forest, design, y, run_rng.split(2)).z_scores;

    double shadow_max = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < p; ++c) shadow_max = std::max(shadow_max, importance[p + c]);

    for (std::size_t j = 0; j < p; ++j) {
      if (result.status[j] != BorutaStatus::kTentative) continue;
      ++result.tested[j];
      if (importance[j] > shadow_max) ++result.hits[j];
    }
    result.runs = run + 1;

    const double threshold = config.alpha / static_cast<double>(undecided);
    for (std::size_t j = 0; j < p; ++j) {
      if (result.status[j] != BorutaStatus::kTentative) continue;
      const std::size_t r = result.tested[j];
      const std::size_t h = result.hits[j];
      const double upper = binomial_upper_tail_half(h, r);
      const double lower = binomial_lower_tail_half(h, r);
      const double p_two = std::min(1.0, 2.0 * std::min(upper, lower));
      if (p_two < threshold) {
        result.status[j] =
            2 * h > r ? BorutaStatus::kConfirmed : BorutaStatus::kRejected;
      }
    }
  }

  for (std::size_t j = 0; j < p; ++j) {
    switch (result.status[j]) {
      case BorutaStatus::kConfirmed: result.confirmed.push_back(j); break;
      case BorutaStatus::kTentative: result.tentative.push_back(j); break;
      case BorutaStatus::kRejected: result.rejected.push_back(j); break;
    }
  }
  return result;
}

}  // namespace selekta
