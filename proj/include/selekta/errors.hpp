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

#ifndef SELEKTA_ERRORS_HPP_
#define SELEKTA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selekta {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or configuration (exit code 2 at the CLI).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; carries 1-based row and the column name when known.
class LoadError : public Error {
 public:
  LoadError(const std::string& message, std::size_t row, std::string column)
      : Error(message), row_(row), column_(std::move(column)) {}
  explicit LoadError(const std::string& message) : Error(message), row_(0) {}

  std::size_t row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

/// Rank-deficient design matrix; names the offending column index.
class SingularDesignError : public Error {
 public:
  SingularDesignError(const std::string& message, std::size_t column_index)
      : Error(message), column_index_(column_index) {}

  std::size_t column_index() const { return column_index_; }

 private:
  std::size_t column_index_;
};

/// A column with no variation where variation is required.
class ZeroVarianceError : public Error {
 public:
  ZeroVarianceError(const std::string& message, std::string column)
      : Error(message), column_(std::move(column)) {}

  const std::string& column() const { return column_; }

 private:
  std::string column_;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An input violated a documented precondition (e.g. non-symmetric matrix).
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

/// A selection procedure eliminated every feature.
class EmptySelectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace selekta

#endif  // SELEKTA_ERRORS_HPP_
