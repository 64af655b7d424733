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

// Generates data/example_indicators.csv: 32 years of synthetic indicator
// series whose sample correlation matrix equals kTargetCorrelation exactly
// (up to floating-point rounding).  The values themselves are simulated,
// not observations; only the correlation structure, means and spreads are
// chosen to look like plausible indicator data.
//
// Method: draw a 32x13 normal matrix, center it, whiten it against its own
// sample covariance, then color it with the Cholesky factor of the target
// correlation.  Affine per-column scaling preserves correlations.

#include <cstdio>
#include <cmath>
#include <string>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/matrix.hpp"
#include "selekta/rng.hpp"

namespace {

using selekta::Matrix;
using selekta::Vector;

constexpr std::size_t kVars = 13;   // response + 12 features
constexpr std::size_t kYears = 32;
constexpr int kFirstYear = 1990;

const char* kCodes[kVars] = {"REC", "CO2",  "DINV", "EG",  "EXR",  "FDEV", "FDI",
                             "INC", "IND",  "INFL", "TOUR", "TR",  "URB"};

// Lower triangle of the target correlation matrix, rows in kCodes order.
const std::vector<std::vector<double>> kTargetCorrelation = {
    {1},
    {-0.344, 1},
    {0.502, -0.200, 1},
    {-0.395, 0.460, 0.168, 1},
    {-0.010, 0.142, -0.042, -0.130, 1},
    {0.107, 0.000, -0.463, -0.272, 0.076, 1},
    {0.153, 0.010, 0.274, 0.035, -0.275, -0.087, 1},
    {-0.112, 0.150, -0.272, -0.169, 0.055, 0.164, -0.092, 1},
    {-0.449, 0.496, -0.003, 0.818, -0.046, -0.188, 0.094, -0.036, 1},
    {0.369, -0.135, 0.181, -0.184, 0.549, -0.056, -0.234, 0.033, -0.133, 1},
    {-0.124, 0.439, 0.270, 0.745, 0.092, -0.412, -0.145, -0.111, 0.655, 0.076, 1},
    {-0.428, 0.135, 0.071, 0.468, -0.012, -0.112, 0.591, -0.200, 0.398, -0.215, 0.119, 1},
    {0.490, -0.082, 0.171, -0.081, -0.270, 0.326, 0.359, -0.229, -0.017, -0.040, 0.042,
     -0.090, 1},
};

// Per-column location/scale, picked to look like plausible indicator levels.
const double kMean[kVars] = {62.0, 0.13,  21.0, 1.2,   1900.0, 11.5, 2.6,
                             480.0, 13.5, 9.5,  170000.0, 56.0, 27.0};
const double kSd[kVars] = {6.0,  0.025, 7.5,  3.8,   450.0,  2.6,  2.1,
                           38.0, 2.4,   7.0,  42000.0,  11.0, 4.5};

Matrix target_correlation() {
  Matrix c(kVars, kVars);
  for (std::size_t i = 0; i < kVars; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      c(i, j) = kTargetCorrelation[i][j];
      c(j, i) = kTargetCorrelation[i][j];
    }
  return c;
}

// Cholesky factor (lower triangular) of a positive-definite matrix.
Matrix cholesky(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix l(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = a(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
      if (i == j) {
        if (acc <= 0.0) {
          std::fprintf(stderr, "matrix is not positive definite\n");
          std::exit(1);
        }
        l(i, i) = std::sqrt(acc);
      } else {
        l(i, j) = acc / l(j, j);
      }
    }
  }
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path = argc > 1 ? argv[1] : "data/example_indicators.csv";

  selekta::RngStream rng(515151);
  Matrix z(kYears, kVars);
  for (std::size_t i = 0; i < kYears; ++i)
    for (std::size_t j = 0; j < kVars; ++j) z(i, j) = rng.normal();

  // Center columns.
  for (std::size_t j = 0; j < kVars; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < kYears; ++i) mean += z(i, j);
    mean /= kYears;
    for (std::size_t i = 0; i < kYears; ++i) z(i, j) -= mean;
  }

  // Whiten: sample covariance of w is the identity.
  Matrix cov(kVars, kVars, 0.0);
  for (std::size_t a = 0; a < kVars; ++a)
    for (std::size_t b = 0; b < kVars; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kYears; ++i) acc += z(i, a) * z(i, b);
      cov(a, b) = acc / (kYears - 1.0);
    }
  Matrix ls = cholesky(cov);
  Matrix w(kYears, kVars);
  for (std::size_t i = 0; i < kYears; ++i) {
    // Solve ls * row = z_row (forward substitution).
    for (std::size_t j = 0; j < kVars; ++j) {
      double acc = z(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= ls(j, k) * w(i, k);
      w(i, j) = acc / ls(j, j);
    }
  }

  // Color with the target correlation, then scale and shift.
  Matrix lc = cholesky(target_correlation());
  Matrix x(kYears, kVars);
  for (std::size_t i = 0; i < kYears; ++i)
    for (std::size_t j = 0; j < kVars; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= j; ++k) acc += lc(j, k) * w(i, k);
      x(i, j) = kMean[j] + kSd[j] * acc;
    }

  // Verify the achieved correlations before writing anything.
  Matrix achieved = selekta::pearson_correlation(x);
  Matrix target = target_correlation();
  double max_err = 0.0;
  for (std::size_t i = 0; i < kVars; ++i)
    for (std::size_t j = 0; j < kVars; ++j)
      max_err = std::max(max_err, std::abs(achieved(i, j) - target(i, j)));
  if (max_err > 1e-10) {
    std::fprintf(stderr, "correlation mismatch: %.3e\n", max_err);
    return 1;
  }

  std::FILE* out = std::fopen(out_path.c_str(), "w");
  if (!out) {
    std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
    return 1;
  }
  std::fprintf(out, "YEAR");
  for (const char* code : kCodes) std::fprintf(out, ",%s", code);
  std::fprintf(out, "\n");
  for (std::size_t i = 0; i < kYears; ++i) {
    std::fprintf(out, "%d", kFirstYear + static_cast<int>(i));
    for (std::size_t j = 0; j < kVars; ++j) std::fprintf(out, ",%.17g", x(i, j));
    std::fprintf(out, "\n");
  }
  std::fclose(out);
  std::printf("wrote %s (max correlation error %.3e)\n", out_path.c_str(), max_err);
  return 0;
}
