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

#ifndef SELEKTA_METAHEURISTICS_HPP_
#define SELEKTA_METAHEURISTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/matrix.hpp"
#include "selekta/rng.hpp"

namespace selekta {

/// Memoized subset fitness: mean held-out RMSE of intercept OLS refits over
/// one shared fold plan, keyed by feature bitmask (bit j = feature j).
/// Re-evaluating a mask never changes its recorded value, so every subset is
/// scored exactly once per search.
class SubsetFitness {
 public:
  /// Throws ArgumentError when p is 0 or exceeds 64 (bitmask width).
  SubsetFitness(const Matrix& x, const Vector& y, const FoldPlan& folds);

  /// Mean CV RMSE for a non-empty mask (ArgumentError on 0).
  double rmse(std::uint64_t mask);

  std::size_t evaluations() const { return cache_.size(); }

 private:
  const Matrix& x_;
  const Vector& y_;
  const FoldPlan& folds_;
  std::unordered_map<std::uint64_t, double> cache_;
};

struct AnnealConfig {
  std::size_t iterations = 500;
  /// Negative = automatic: half the starting subset's CV RMSE.  Zero is the
  /// hill-climbing limit: no worse state is ever accepted.
  double initial_temperature = -1.0;
  double cooling_rate = 0.97;
  /// Upper bound on membership flips per move; each move flips a uniformly
  /// drawn 1..perturbation_size distinct features.
  std::size_t perturbation_size = 3;
  /// Reset the walk to the best-known subset after this many iterations
  /// without a new global best.
  std::size_t restart_after = 100;
};

struct AnnealResult {
  std::vector<std::size_t> selected;  // ascending
  double cv_rmse = 0.0;
  /// Best-known RMSE after each iteration; front() is the starting subset's.
  std::vector<double> best_trace;
  /// RMSE of the accepted state after each iteration (same indexing); at
  /// temperature zero this is non-increasing (pure hill climbing).
  std::vector<double> walk_trace;
  std::size_t evaluations = 0;  // distinct subsets fit
  std::size_t restarts = 0;
};

/// Simulated annealing over feature subsets.
///
/// Starts from a random non-empty subset (each feature kept with
/// probability 1/2, redrawn while empty).  Each iteration flips 1..
/// perturbation_size distinct memberships (redrawn while the result is
/// empty), accepts any non-worse move, accepts worse moves with probability
/// exp(-(new - old)/T), then multiplies T by cooling_rate.  Returns the best
/// subset ever visited; RMSE ties prefer fewer features, then the smaller
/// bitmask.  Deterministic for a given rng identity.
AnnealResult anneal_select(const Matrix& x, const Vector& y, const FoldPlan& folds,
                           const AnnealConfig& config, RngStream rng);

struct GaConfig {
  std::size_t population_size = 50;
  std::size_t generations = 100;
  double crossover_rate = 0.8;
  double mutation_rate = 0.05;  // per gene
  std::size_t elitism = 2;
  std::size_t tournament_size = 3;
};

struct GaResult {
  std::vector<std::size_t> selected;  // ascending
  double cv_rmse = 0.0;
  /// Best-known RMSE after the initial population and each generation.
  std::vector<double> best_trace;
  std::size_t evaluations = 0;  // distinct subsets fit
};

/// Genetic search over binary feature chromosomes.
///
/// Fitness is the negative subset CV RMSE.  Each generation keeps the
/// `elitism` fittest chromosomes, then fills the population with children
/// of tournament-selected parents via uniform crossover (applied with
/// probability crossover_rate, otherwise the parents are copied) and
/// per-gene bit-flip mutation; empty chromosomes are repaired by switching
/// one random gene on.  Chromosome comparisons break RMSE ties toward fewer
/// features, then the smaller bitmask.  Generation g draws all its decisions
/// from rng.split(g + 1); the initial population comes from rng.split(0).
/// A non-empty initial_population overrides the random one and must hold
/// exactly population_size non-empty masks (ArgumentError otherwise).
GaResult ga_select(const Matrix& x, const Vector& y, const FoldPlan& folds,
                   const GaConfig& config, const RngStream& rng,
                   const std::vector<std::uint64_t>& initial_population = {});

}  // namespace selekta

#endif  // SELEKTA_METAHEURISTICS_HPP_
