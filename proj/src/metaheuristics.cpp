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

#include "selekta/metaheuristics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "selekta/errors.hpp"
#include "selekta/linear_model.hpp"

namespace selekta {

namespace {

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1) out.push_back(j);
  }
  return out;
}

// RMSE first, then fewer features, then the smaller bitmask.
bool better(double rmse_a, std::uint64_t mask_a, double rmse_b, std::uint64_t mask_b) {
  if (rmse_a != rmse_b) return rmse_a < rmse_b;
  const int pa = std::popcount(mask_a), pb = std::popcount(mask_b);
  if (pa != pb) return pa < pb;
  return mask_a < mask_b;
}

}  // namespace

SubsetFitness::SubsetFitness(const Matrix& x, const Vector& y, const FoldPlan& folds)
    : x_(x), y_(y), folds_(folds) {
  if (x.cols() == 0) throw ArgumentError("subset fitness: at least one feature required");
  if (x.cols() > 64) throw ArgumentError("subset fitness: more than 64 features");
  if (y.size() != x.rows()) throw ArgumentError("subset fitness: row count mismatch");
}

double SubsetFitness::rmse(std::uint64_t mask) {
  if (mask == 0) throw ArgumentError("subset fitness: empty subset");
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  const double value = cv_rmse(x_, y_, mask_to_indices(mask), folds_);
  cache_.emplace(mask, value);
  return value;
}

AnnealResult anneal_select(const Matrix& x, const Vector& y, const FoldPlan& folds,
                           const AnnealConfig& config, RngStream rng) {
  const std::size_t p = x.cols();
  if (config.iterations == 0) throw ArgumentError("anneal: iterations must be positive");
  if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0)) {
    throw ArgumentError("anneal: cooling_rate must lie in (0, 1)");
  }
  if (config.perturbation_size == 0 || config.perturbation_size > p) {
    throw ArgumentError("anneal: perturbation_size must lie in [1, p]");
  }
  if (config.restart_after == 0) throw ArgumentError("anneal: restart_after must be positive");

  SubsetFitness fitness(x, y, folds);

  std::uint64_t current = 0;
  do {
    current = 0;
    for (std::size_t j = 0; j < p; ++j) {
      current |= static_cast<std::uint64_t>(rng.uniform_below(2)) << j;
    }
  } while (current == 0);
  double current_rmse = fitness.rmse(current);

  double temperature =
      config.initial_temperature < 0.0 ? 0.5 * current_rmse : config.initial_temperature;

  AnnealResult result;
  result.best_trace.reserve(config.iterations + 1);
  result.walk_trace.reserve(config.iterations + 1);
  std::uint64_t best = current;
  double best_rmse = current_rmse;
  result.best_trace.push_back(best_rmse);
  result.walk_trace.push_back(current_rmse);

  std::size_t stagnant = 0;
  std::vector<std::size_t> positions(p);
  for (std::size_t iter = 0; iter < config.iterations; ++iter) {
    std::uint64_t candidate = 0;
    do {
      const std::size_t flips = 1 + rng.uniform_below(config.perturbation_size);
      candidate = current;
      for (std::size_t j = 0; j < p; ++j) positions[j] = j;
      for (std::size_t i = 0; i < flips; ++i) {
        const std::size_t pick = i + rng.uniform_below(p - i);
        std::swap(positions[i], positions[pick]);
        candidate ^= std::uint64_t{1} << positions[i];
      }
    } while (candidate == 0);

    const double candidate_rmse = fitness.rmse(candidate);
    bool accept = candidate_rmse <= current_rmse;
    if (!accept && temperature > 0.0) {
      const double probability = std::exp(-(candidate_rmse - current_rmse) / temperature);
      accept = rng.uniform01() < probability;
    }
    if (accept) {
      current = candidate;
      current_rmse = candidate_rmse;
    }

    if (better(current_rmse, current, best_rmse, best)) {
      best = current;
      best_rmse = current_rmse;
      stagnant = 0;
    } else if (++stagnant >= config.restart_after) {
      current = best;
      current_rmse = best_rmse;
      stagnant = 0;
      ++result.restarts;
    }
    temperature *= config.cooling_rate;
    result.best_trace.push_back(best_rmse);
    result.walk_trace.push_back(current_rmse);
  }

  result.selected = mask_to_indices(best);
  result.cv_rmse = best_rmse;
  result.evaluations = fitness.evaluations();
  return result;
}

GaResult ga_select(const Matrix& x, const Vector& y, const FoldPlan& folds,
                   const GaConfig& config, const RngStream& rng,
                   const std::vector<std::uint64_t>& initial_population) {
  const std::size_t p = x.cols();
  if (config.population_size < 2) throw ArgumentError("ga: population_size must be >= 2");
  if (config.generations == 0) throw ArgumentError("ga: generations must be positive");
  if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
    throw ArgumentError("ga: crossover_rate must lie in [0, 1]");
  }
  if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
    throw ArgumentError("ga: mutation_rate must lie in [0, 1]");
  }
  if (config.elitism >= config.population_size) {
    throw ArgumentError("ga: elitism must be smaller than the population");
  }
  if (config.tournament_size == 0 || config.tournament_size > config.population_size) {
    throw ArgumentError("ga: tournament_size must lie in [1, population_size]");
  }

  SubsetFitness fitness(x, y, folds);

  std::vector<std::uint64_t> population;
  if (!initial_population.empty()) {
    if (initial_population.size() != config.population_size) {
      throw ArgumentError("ga: initial population size mismatch");
    }
    for (std::uint64_t mask : initial_population) {
      if (mask == 0) throw ArgumentError("ga: initial population holds an empty chromosome");
      if (p < 64 && mask >> p) {
        throw ArgumentError("ga: initial population uses features beyond p");
      }
    }
    population = initial_population;
  } else {
    RngStream init_rng = rng.split(0);
    population.resize(config.population_size);
    for (std::uint64_t& mask : population) {
      mask = 0;
      for (std::size_t j = 0; j < p; ++j) {
        mask |= static_cast<std::uint64_t>(init_rng.uniform_below(2)) << j;
      }
      if (mask == 0) mask = std::uint64_t{1} << init_rng.uniform_below(p);
    }
  }

  std::vector<double> scores(config.population_size);
  for (std::size_t i = 0; i < population.size(); ++i) scores[i] = fitness.rmse(population[i]);

  GaResult result;
  std::uint64_t best = population[0];
  double best_rmse = scores[0];
  auto track_best = [&](std::uint64_t mask, double rmse) {
    if (better(rmse, mask, best_rmse, best)) {
      best = mask;
      best_rmse = rmse;
    }
  };
  for (std::size_t i = 1; i < population.size(); ++i) track_best(population[i], scores[i]);
  result.best_trace.reserve(config.generations + 1);
  result.best_trace.push_back(best_rmse);

  std::vector<std::size_t> order(config.population_size);
  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    RngStream gen_rng = rng.split(gen + 1);

    // Rank for elitism: fittest first under the deterministic comparator.
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return better(scores[a], population[a], scores[b], population[b]);
    });

    std::vector<std::uint64_t> next;
    next.reserve(config.population_size);
    for (std::size_t e = 0; e < config.elitism; ++e) next.push_back(population[order[e]]);

    auto tournament = [&]() -> std::uint64_t {
      std::size_t winner = gen_rng.uniform_below(config.population_size);
      for (std::size_t t = 1; t < config.tournament_size; ++t) {
        const std::size_t rival = gen_rng.uniform_below(config.population_size);
        if (better(scores[rival], population[rival], scores[winner], population[winner])) {
          winner = rival;
        }
      }
      return population[winner];
    };

    while (next.size() < config.population_size) {
      std::uint64_t child_a = tournament();
      std::uint64_t child_b = tournament();
      if (gen_rng.uniform01() < config.crossover_rate) {
        std::uint64_t swap_mask = 0;
        for (std::size_t j = 0; j < p; ++j) {
          swap_mask |= static_cast<std::uint64_t>(gen_rng.uniform_below(2)) << j;
        }
        const std::uint64_t a = child_a, b = child_b;
        child_a = (a & ~swap_mask) | (b & swap_mask);
        child_b = (b & ~swap_mask) | (a & swap_mask);
      }
      for (std::uint64_t* child : {&child_a, &child_b}) {
        for (std::size_t j = 0; j < p; ++j) {
          if (gen_rng.uniform01() < config.mutation_rate) *child ^= std::uint64_t{1} << j;
        }
        if (*child == 0) *child = std::uint64_t{1} << gen_rng.uniform_below(p);
        if (next.size() < config.population_size) next.push_back(*child);
      }
    }

    population = std::move(next);
    for (std::size_t i = 0; i < population.size(); ++i) {
      scores[i] = fitness.rmse(population[i]);
      track_best(population[i], scores[i]);
    }
    result.best_trace.push_back(best_rmse);
  }

  result.selected = mask_to_indices(best);
  result.cv_rmse = best_rmse;
  result.evaluations = fitness.evaluations();
  return result;
}

}  // namespace selekta
