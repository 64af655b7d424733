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

#include "selekta/stats.hpp"

#include <cmath>
#include <limits>

#include "selekta/errors.hpp"

namespace selekta {

namespace {

// Lentz's continued-fraction evaluation of the incomplete beta function,
// valid (and fast) for x < (a + 1) / (a + b + 2).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  throw ConvergenceError("incomplete_beta: continued fraction did not converge");
}

double log_binomial_coefficient(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw ArgumentError("incomplete_beta: a and b must be positive");
  if (x < 0.0 || x > 1.0)
    throw ArgumentError("incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;  // symmetry: I_x(a,b) = 1 - I_{1-x}(b,a)
}

double student_t_two_sided(double t, double df) {
  if (!(df > 0.0)) throw ArgumentError("student_t_two_sided: df must be positive");
  if (!std::isfinite(t)) return 0.0;
  const double x = df / (df + t * t);
  // P(|T| >= t) = I_x(df/2, 1/2)
  return incomplete_beta(df / 2.0, 0.5, x);
}

double f_upper_tail(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0))
    throw ArgumentError("f_upper_tail: degrees of freedom must be positive");
  if (f <= 0.0) return 1.0;
  if (!std::isfinite(f)) return 0.0;
  const double x = df2 / (df2 + df1 * f);
  // P(F >= f) = I_x(df2/2, df1/2)
  return incomplete_beta(df2 / 2.0, df1 / 2.0, x);
}

double binomial_upper_tail_half(std::size_t hits, std::size_t n) {
  if (hits > n) return 0.0;
  const double log_half_n = -static_cast<double>(n) * std::log(2.0);
  double acc = 0.0;
  for (std::size_t k = hits; k <= n; ++k)
    acc += std::exp(log_binomial_coefficient(n, k) + log_half_n);
  return acc > 1.0 ? 1.0 : acc;
}

double binomial_lower_tail_half(std::size_t hits, std::size_t n) {
  if (hits >= n) return 1.0;
  const double log_half_n = -static_cast<double>(n) * std::log(2.0);
  double acc = 0.0;
  for (std::size_t k = 0; k <= hits; ++k)
    acc += std::exp(log_binomial_coefficient(n, k) + log_half_n);
  return acc > 1.0 ? 1.0 : acc;
}

}  // namespace selekta
