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

#ifndef SELEKTA_REPORT_HPP_
#define SELEKTA_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "selekta/dataset.hpp"
#include "selekta/filters.hpp"
#include "selekta/linear_model.hpp"
#include "selekta/matrix.hpp"

namespace selekta {

inline constexpr char kToolName[] = "selekta";
inline constexpr char kToolVersion[] = "1.0.0";

/// The eleven model identifiers, in execution (and table) order.
const std::vector<std::string>& model_ids();

/// Sign of a displayed coefficient; kAbsent means the feature was not
/// selected by the model.
enum class CoefficientSign { kAbsent, kPositive, kNegative };

/// Two-sided p-value bucket of a displayed coefficient.
enum class Significance { kNone, kP10, kP05, kP01 };

/// Strongest threshold strictly above `p` (p < .01 beats p < .05 ...).
Significance significance_from_p(double p);

/// One line of the model-comparison table.
struct ComparisonRow {
  std::string model_id;
  std::size_t n_regressors = 0;
  double adj_r2 = 0.0;
  double cp = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  bool best_adj_r2 = false;  // column maximum
  bool best_cp = false;      // column minima
  bool best_aic = false;
  bool best_bic = false;
};

/// Mark the best value of each criterion column across `rows`
/// (maximum adj_r2; minimum cp, aic, bic).  Ties flag every holder.
void flag_best_columns(std::vector<ComparisonRow>& rows);

/// One cell of the model-summary grid.
struct SummaryCell {
  std::string model_id;
  std::string feature;
  CoefficientSign sign = CoefficientSign::kAbsent;
  Significance significance = Significance::kNone;
};

/// Display marker of a cell: sign character plus significance stars
/// ("+***", "-*", ...); absent cells render empty.
std::string cell_marker(const SummaryCell& cell);

/// A feature set forced onto one model id, bypassing its search.
struct PinnedSubset {
  std::string model_id;
  std::vector<std::string> features;  // codes, schema order not required
};

/// Everything a pipeline run needs; the manifest echoes these settings.
struct PipelineConfig {
  std::string input_path;
  std::uint64_t seed = 20211990;
  std::size_t folds = 5;
  /// Model ids to execute; empty means all eleven.  Execution always
  /// follows the canonical order regardless of the order given here.
  std::vector<std::string> methods;
  /// Pins are honored for the nine subset-selection models (everything
  /// except "full" and "pcr").
  std::vector<PinnedSubset> pinned_subsets;
  /// Negative: choose the penalty by cross-validation.
  double lasso_lambda = -1.0;
  double correlation_cutoff = 0.75;
};

/// Settings echo sufficient to reproduce a run bit for bit.
struct RunManifest {
  std::string input_path;
  std::uint64_t seed = 20211990;
  std::size_t folds = 5;
  std::vector<std::string> methods;  // executed, in execution order
  std::vector<PinnedSubset> pinned_subsets;
  double lasso_lambda = -1.0;
  double correlation_cutoff = 0.75;
  std::string version = kToolVersion;
};

/// One executed model: the feature columns it selected and the origin of
/// that choice.  "pcr" keeps every column and records the retained
/// component count instead.
struct ModelRecord {
  std::string model_id;
  std::vector<std::size_t> columns;  // ascending feature indices
  bool pinned = false;
  std::size_t components = 0;  // "pcr" only
};

/// Everything run_pipeline produces; renderers below turn the pieces into
/// the published text, CSV and JSON documents.
struct ReportBundle {
  StandardizedDataset data;
  std::vector<ModelRecord> models;
  std::vector<ComparisonRow> comparison;
  std::vector<SummaryCell> summary;  // models x features, absent included
  RelativeImportance lmg;
  Matrix correlation;  // response + features, response first
  std::vector<std::string> correlation_labels;
  RunManifest manifest;
};

/// Load, standardize, and run the configured models in canonical order,
/// then decompose the full model's R^2.  Cross-validation folds come from
/// substream 0 of the run seed; "boruta", "sa" and "ga" consume substreams
/// 1, 2 and 3, so each model's result is independent of which other models
/// run.  Deterministic methods share the one fold plan.
///
/// "full" refits every feature; "pcr" regresses on the cross-validated
/// component count and reports criteria computed from its feature-space
/// predictions; every other model refits its selected subset with
/// intercept OLS.  "boruta" selects its Confirmed features.  A model that
/// selects nothing contributes an intercept-only row.
///
/// Errors: ArgumentError for unknown model ids, malformed pins or bad
/// settings; module errors propagate unchanged.
ReportBundle run_pipeline(const PipelineConfig& config);

/// Renderers.  Text tables use 4 decimals and append '*' to the flagged
/// best value of each criterion column; CSV and JSON carry 6 decimals.
/// JSON output is byte-deterministic for equal inputs.
std::string render_comparison_text(const std::vector<ComparisonRow>& rows);
std::string render_comparison_csv(const std::vector<ComparisonRow>& rows);
std::string render_comparison_json(const std::vector<ComparisonRow>& rows);

std::string render_summary_text(const std::vector<SummaryCell>& cells,
                                const std::vector<std::string>& features);
std::string render_summary_csv(const std::vector<SummaryCell>& cells,
                               const std::vector<std::string>& features);
std::string render_summary_json(const std::vector<SummaryCell>& cells,
                                const std::vector<std::string>& features);

/// Two columns (feature, share_percent), descending share; the shares are
/// normalized to sum to 100.  Throws ArgumentError when r2_full is zero.
std::string render_relaimpo_csv(const RelativeImportance& lmg,
                                const std::vector<std::string>& features);

std::string render_correlation_csv(const Matrix& corr,
                                   const std::vector<std::string>& labels);

/// Correlation matrix of [response, feature...] columns, response first.
Matrix correlation_with_response(const StandardizedDataset& data);

std::string render_manifest_json(const RunManifest& manifest);

/// Coefficient display of one fit: estimates, standard errors, t and p
/// per term, fit diagnostics, and the fit's comparison criteria.
std::string render_fit_text(const OlsFit& fit, const InfoCriteria& criteria,
                            double dw, const std::vector<std::string>& features);

/// Write comparison.{txt,csv,json}, summary.{txt,csv,json}, relaimpo.csv,
/// correlation.csv and manifest.json under `out_dir` (created if missing).
/// All content is rendered up front; if any file cannot be written, the
/// files already written by this call are removed and ArgumentError is
/// thrown.  Returns the paths written, in a fixed order.
std::vector<std::string> write_bundle(const ReportBundle& bundle,
                                      const std::string& out_dir);

}  // namespace selekta

#endif  // SELEKTA_REPORT_HPP_
