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

#ifndef SELEKTA_STATS_HPP_
#define SELEKTA_STATS_HPP_

#include <cstddef>

namespace selekta {

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
/// Continued-fraction evaluation, accurate to ~1e-12.
double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a Student-t statistic with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

/// Upper-tail p-value of an F statistic with (df1, df2) degrees of freedom.
double f_upper_tail(double f, double df1, double df2);

/// Exact binomial tail probabilities for X ~ Binomial(n, 1/2).
double binomial_upper_tail_half(std::size_t hits, std::size_t n);  // P(X >= hits)
double binomial_lower_tail_half(std::size_t hits, std::size_t n);  // P(X <= hits)

}  // namespace selekta

#endif  // SELEKTA_STATS_HPP_
