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

#ifndef SELEKTA_MATRIX_HPP_
#define SELEKTA_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace selekta {

using Vector = std::vector<double>;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Vector col(std::size_t j) const;
  void set_col(std::size_t j, const Vector& values);

  /// Columns `keep` (in the given order) as a new matrix.
  Matrix select_cols(const std::vector<std::size_t>& keep) const;

  /// Rows `keep` (in the given order) as a new matrix.
  Matrix select_rows(const std::vector<std::size_t>& keep) const;

  bool all_finite() const;

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& v);
double dot(const Vector& a, const Vector& b);

/// Least-squares solver backed by a Householder QR factorization.
///
/// Throws SingularDesignError when any |R(j,j)| falls below
/// 1e-10 * max_i |R(i,i)|, naming the offending column.
class QrLeastSquares {
 public:
  explicit QrLeastSquares(const Matrix& x);

  /// Coefficients minimizing ||y - X b||_2.
  Vector solve(const Vector& y) const;

  /// Diagonal of (X'X)^{-1}, used for coefficient standard errors.
  Vector xtx_inverse_diagonal() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Matrix packed_;  // R in the upper triangle, Householder vectors below
  Vector tau_;
};

/// Convenience wrapper: factorize and solve in one call.
Vector qr_least_squares(const Matrix& x, const Vector& y);

/// Eigendecomposition of a symmetric matrix.
struct SymmetricEigen {
  Vector values;        // descending
  Matrix vectors;       // eigenvectors in columns, same order as `values`
};

/// Cyclic Jacobi eigendecomposition.  The input must be symmetric within
/// 1e-12 (relative to its largest entry); convergence threshold is an
/// off-diagonal Frobenius norm below 1e-12.
SymmetricEigen eig_symmetric(const Matrix& s);

/// Pearson correlation matrix of the columns of `x` (unit diagonal, exact
/// symmetry).  Throws ZeroVarianceError for any constant column.
Matrix pearson_correlation(const Matrix& x);

}  // namespace selekta

#endif  // SELEKTA_MATRIX_HPP_
