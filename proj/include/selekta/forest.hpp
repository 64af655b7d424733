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

#ifndef SELEKTA_FOREST_HPP_
#define SELEKTA_FOREST_HPP_

#include <cstddef>
#include <vector>

#include "selekta/matrix.hpp"
#include "selekta/rng.hpp"

namespace selekta {

/// One node of a regression tree, stored in a flat array.
struct TreeNode {
  bool is_leaf = true;
  double value = 0.0;        // leaf mean
  std::size_t feature = 0;   // split feature (internal nodes)
  double threshold = 0.0;    // rows with x <= threshold go left
  std::size_t left = 0;      // child indices into RegressionTree::nodes
  std::size_t right = 0;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

/// Prediction of a single tree on row `row` of `x`.
double tree_predict(const RegressionTree& tree, const Matrix& x, std::size_t row);

/// Bagged regression forest with variance-reduction splits.
struct ForestModel {
  std::vector<RegressionTree> trees;
  std::vector<std::vector<std::size_t>> bootstrap;  // per tree, n draws
  std::vector<std::vector<std::size_t>> oob;        // per tree, ascending
  std::size_t m_try = 0;
  std::size_t min_node_size = 0;
};

/// Mean over trees, per row of `x`.
Vector forest_predict(const ForestModel& model, const Matrix& x);

/// Fit `n_trees` trees, each on its own bootstrap sample (n draws with
/// replacement).  Every split samples `m_try` features without replacement
/// and takes the (feature, midpoint threshold) pair with the smallest
/// child-weighted squared error; ties prefer the lowest feature index,
/// then the smallest threshold.  A node becomes a leaf when it cannot give
/// both children at least `min_node_size` rows, or its response is
/// constant.  m_try = 0 means the default max(1, p/3).
///
/// The forest is a pure function of (x, y, parameters, rng identity):
/// tree t draws everything from rng.split(t).
ForestModel forest_fit(const Matrix& x, const Vector& y, std::size_t n_trees,
                       std::size_t m_try, std::size_t min_node_size,
                       const RngStream& rng);

/// Out-of-bag permutation importance in Z-score form.
struct PermutationImportance {
  Vector z_scores;             // per feature; exactly 0 for never-used columns
  std::size_t skipped_trees = 0;  // trees with an empty out-of-bag set
};

/// For each tree with out-of-bag rows: squared-error increase after
/// permuting one column across those rows, averaged over trees and divided
/// by its standard deviation across trees.  Throws ArgumentError when no
/// tree has out-of-bag rows.
PermutationImportance permutation_importance(const ForestModel& model, const Matrix& x,
                                             const Vector& y, const RngStream& rng);

/// All-relevant feature selection against shadow permutations.
enum class BorutaStatus { kTentative, kConfirmed, kRejected };

struct BorutaResult {
  std::vector<BorutaStatus> status;     // per feature
  std::vector<std::size_t> confirmed;   // ascending
  std::vector<std::size_t> tentative;   // ascending
  std::vector<std::size_t> rejected;    // ascending
  std::vector<std::size_t> hits;        // per feature, frozen at decision
  std::vector<std::size_t> tested;      // runs the feature was undecided in
  std::size_t runs = 0;
  double alpha = 0.0;
};

struct BorutaConfig {
  std::size_t max_runs = 100;
  double alpha = 0.01;
  std::size_t n_trees = 500;
  std::size_t min_node_size = 5;
};

/// Per run: append one freshly shuffled shadow copy of every feature, fit
/// a forest on the doubled design with m_try = total columns / 3, and
/// score a hit for each undecided feature whose importance exceeds the
/// maximum shadow importance.  Exact two-sided binomial tests (p = 1/2),
/// Bonferroni-corrected by the number of undecided features, move features
/// to Confirmed or Rejected.  Decided features keep their columns and
/// shadows, so the benchmark never weakens as decisions accumulate.  Stops
/// when nothing is undecided or after max_runs; leftovers stay Tentative.
BorutaResult boruta(const Matrix& x, const Vector& y, const BorutaConfig& config,
                    const RngStream& rng);

}  // namespace selekta

#endif  // SELEKTA_FOREST_HPP_
