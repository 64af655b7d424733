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

#include "selekta/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "selekta/errors.hpp"

namespace selekta {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vector& values) {
  if (values.size() != rows_) throw ArgumentError("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& keep) const {
  Matrix out(rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(i, keep[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& keep) const {
  Matrix out(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(keep[i], j);
  return out;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matmul: shape mismatch");
  Matrix out(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector matvec(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw ArgumentError("matvec: shape mismatch");
  Vector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

namespace {

constexpr double kRankTolerance = 1e-10;

}  // namespace

QrLeastSquares::QrLeastSquares(const Matrix& x)
    : rows_(x.rows()), cols_(x.cols()), packed_(x), tau_(x.cols(), 0.0) {
  if (rows_ < cols_)
    throw ArgumentError("qr: need at least as many rows as columns");
  if (cols_ == 0) throw ArgumentError("qr: empty design");
  if (!packed_.all_finite()) throw ArgumentError("qr: non-finite entries");

  // Householder reduction; reflector j is stored below the diagonal of
  // column j with an implicit leading 1, its scale in tau_[j].
  for (std::size_t j = 0; j < cols_; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < rows_; ++i) norm += packed_(i, j) * packed_(i, j);
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      tau_[j] = 0.0;
      continue;  // caught by the rank check below
    }
    const double alpha = packed_(j, j) >= 0.0 ? -norm : norm;
    const double head = packed_(j, j) - alpha;
    for (std::size_t i = j + 1; i < rows_; ++i) packed_(i, j) /= head;
    tau_[j] = -head / alpha;
    packed_(j, j) = alpha;

    for (std::size_t k = j + 1; k < cols_; ++k) {
      double acc = packed_(j, k);
      for (std::size_t i = j + 1; i < rows_; ++i)
        acc += packed_(i, j) * packed_(i, k);
      acc *= tau_[j];
      packed_(j, k) -= acc;
      for (std::size_t i = j + 1; i < rows_; ++i)
        packed_(i, k) -= packed_(i, j) * acc;
    }
  }

  double max_diag = 0.0;
  for (std::size_t j = 0; j < cols_; ++j)
    max_diag = std::max(max_diag, std::abs(packed_(j, j)));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (std::abs(packed_(j, j)) < kRankTolerance * max_diag) {
      throw SingularDesignError(
          "design matrix is rank deficient at column " + std::to_string(j), j);
    }
  }
}

Vector QrLeastSquares::solve(const Vector& y) const {
  if (y.size() != rows_) throw ArgumentError("qr solve: length mismatch");
  Vector work = y;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (tau_[j] == 0.0) continue;
    double acc = work[j];
    for (std::size_t i = j + 1; i < rows_; ++i) acc += packed_(i, j) * work[i];
    acc *= tau_[j];
    work[j] -= acc;
    for (std::size_t i = j + 1; i < rows_; ++i) work[i] -= packed_(i, j) * acc;
  }
  Vector beta(cols_);
  for (std::size_t jj = cols_; jj-- > 0;) {
    double acc = work[jj];
    for (std::size_t k = jj + 1; k < cols_; ++k) acc -= packed_(jj, k) * beta[k];
    beta[jj] = acc / packed_(jj, jj);
  }
  return beta;
}

Vector QrLeastSquares::xtx_inverse_diagonal() const {
  // (X'X)^{-1} = R^{-1} R^{-T}; entry (j,j) is the squared norm of row j
  // of R^{-1}.  Columns of R^{-1} are found by back substitution.
  Matrix rinv(cols_, cols_, 0.0);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t jj = c + 1; jj-- > 0;) {
      double acc = (jj == c) ? 1.0 : 0.0;
      for (std::size_t k = jj + 1; k <= c; ++k) acc -= packed_(jj, k) * rinv(k, c);
      rinv(jj, c) = acc / packed_(jj, jj);
    }
  }
  Vector diag(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t c = j; c < cols_; ++c) diag[j] += rinv(j, c) * rinv(j, c);
  return diag;
}

Vector qr_least_squares(const Matrix& x, const Vector& y) {
  return QrLeastSquares(x).solve(y);
}

SymmetricEigen eig_symmetric(const Matrix& s) {
  if (s.rows() != s.cols()) throw ArgumentError("eig_symmetric: matrix not square");
  const std::size_t n = s.rows();
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(s(i, j)));
  const double sym_tol = 1e-12 * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > sym_tol)
        throw ContractViolationError("eig_symmetric: matrix not symmetric");

  Matrix a = s;
  Matrix v = Matrix::identity(n);
  const double threshold = 1e-12;
  const int max_sweeps = 100;

  auto off_norm = [&]() {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) acc += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(acc);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > max_sweeps)
      throw ConvergenceError("eig_symmetric: Jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return a(l, l) > a(r, r); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

Matrix pearson_correlation(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (n < 2) throw ArgumentError("pearson_correlation: need at least two rows");

  Vector mean(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x(i, j);
    mean[j] = acc / static_cast<double>(n);
  }
  Vector sd(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = x(i, j) - mean[j];
      acc += d * d;
    }
    sd[j] = std::sqrt(acc / static_cast<double>(n - 1));
    if (sd[j] == 0.0)
      throw ZeroVarianceError(
          "pearson_correlation: column " + std::to_string(j) + " is constant",
          std::to_string(j));
  }

  Matrix r(p, p, 0.0);
  for (std::size_t j = 0; j < p; ++j) r(j, j) = 1.0;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        acc += (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
      double rho = acc / (static_cast<double>(n - 1) * sd[a] * sd[b]);
      rho = std::clamp(rho, -1.0, 1.0);
      r(a, b) = rho;
      r(b, a) = rho;
    }
  }
  return r;
}

}  // namespace selekta
