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

#ifndef SELEKTA_DATASET_HPP_
#define SELEKTA_DATASET_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "selekta/matrix.hpp"
#include "selekta/rng.hpp"

namespace selekta {

/// One variable of the indicator table.
struct Variable {
  std::string code;
  std::string description;
  std::string unit;
  std::string source;
};

/// The set of variables a table must provide: one response plus an ordered
/// feature list.  Feature order is the canonical order used everywhere
/// (column order of matrices, tie-breaking, report rows).
class VariableSchema {
 public:
  VariableSchema(Variable response, std::vector<Variable> features);

  /// The built-in schema: response REC and twelve macro, financial, social
  /// and environmental indicator features in alphabetical code order.
  static const VariableSchema& canonical();

  const Variable& response() const { return response_; }
  const std::vector<Variable>& features() const { return features_; }
  std::size_t feature_count() const { return features_.size(); }

  std::vector<std::string> feature_codes() const;
  bool has_feature(const std::string& code) const;
  /// Index of a feature code; throws ArgumentError for unknown codes.
  std::size_t feature_index(const std::string& code) const;

 private:
  Variable response_;
  std::vector<Variable> features_;
};

/// Raw (unstandardized) annual table in schema order.
struct RawTable {
  std::vector<int> years;
  Vector response;
  Matrix features;  // n x feature_count, schema feature order

  std::size_t n() const { return years.size(); }
};

/// Parse a CSV document.  The header must contain YEAR, the response code
/// and every feature code exactly once, in any order, with no extras.
/// Every cell must be a finite number.  Years must be strictly increasing.
/// Violations raise LoadError carrying the 1-based file line and column name.
RawTable parse_csv(const std::string& text, const VariableSchema& schema);

/// parse_csv applied to the contents of `path`.
RawTable load_csv(const std::string& path, const VariableSchema& schema);

/// Column-standardized view of a table: z = (v - mean) / sd with the
/// sample (n-1) standard deviation.  Standardization is computed once on
/// the full table; downstream resampling reuses these columns as-is.
struct StandardizedDataset {
  std::vector<int> years;
  Vector y;
  Matrix x;  // n x p, schema feature order
  std::vector<std::string> feature_names;
  double y_mean = 0.0;
  double y_sd = 0.0;
  Vector x_mean;
  Vector x_sd;

  std::size_t n() const { return y.size(); }
  std::size_t p() const { return x.cols(); }
};

/// Throws ZeroVarianceError (naming the code) for any constant column.
StandardizedDataset standardize(const RawTable& table, const VariableSchema& schema);

/// Test-row indices per fold (ascending within each fold).  Every row
/// appears in exactly one fold and fold sizes differ by at most one.
using FoldPlan = std::vector<std::vector<std::size_t>>;

/// Shuffle rows with `rng` and deal them into `k` folds, 2 <= k <= n.
FoldPlan make_folds(std::size_t n, std::size_t k, RngStream& rng);

}  // namespace selekta

#endif  // SELEKTA_DATASET_HPP_
