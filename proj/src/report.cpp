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

#include "selekta/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "selekta/errors.hpp"
#include "selekta/forest.hpp"
#include "selekta/latent.hpp"
#include "selekta/metaheuristics.hpp"
#include "selekta/rng.hpp"
#include "selekta/shrinkage.hpp"
#include "selekta/subset_search.hpp"

namespace selekta {
namespace {

using ordered_json = nlohmann::ordered_json;

// Substream ids of the run seed; fixed so every stochastic model draws the
// same stream no matter which other models execute.
constexpr std::uint64_t kFoldStream = 0;
constexpr std::uint64_t kBorutaStream = 1;
constexpr std::uint64_t kAnnealStream = 2;
constexpr std::uint64_t kGaStream = 3;

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

// The double that parses back from the 6-decimal rendering used in CSV
// cells, so JSON and CSV publish the same value digit for digit.
double printed6(double value) {
  return std::strtod(fixed(value, 6).c_str(), nullptr);
}

std::string pad_left(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string pad_right(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

void append_line(std::string& out, std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out += line;
  out += '\n';
}

const char* sign_label(CoefficientSign sign) {
  switch (sign) {
    case CoefficientSign::kPositive:
      return "+";
    case CoefficientSign::kNegative:
      return "-";
    case CoefficientSign::kAbsent:
      break;
  }
  return "absent";
}

const char* significance_label(Significance significance) {
  switch (significance) {
    case Significance::kP01:
      return "p<0.01";
    case Significance::kP05:
      return "p<0.05";
    case Significance::kP10:
      return "p<0.1";
    case Significance::kNone:
      break;
  }
  return "none";
}

std::vector<std::size_t> columns_from_codes(const VariableSchema& schema,
                                            const std::vector<std::string>& codes,
                                            const std::string& context) {
  if (codes.empty()) throw ArgumentError(context + ": needs at least one feature");
  std::vector<std::size_t> columns;
  columns.reserve(codes.size());
  for (const auto& code : codes) columns.push_back(schema.feature_index(code));
  std::sort(columns.begin(), columns.end());
  if (std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
    throw ArgumentError(context + ": duplicate feature code");
  }
  return columns;
}

std::vector<std::size_t> nonzero_support(const Vector& coefficients) {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] != 0.0) support.push_back(j);
  }
  return support;
}

ComparisonRow row_from_fit(const std::string& id, const OlsFit& fit, double sigma2_full) {
  const InfoCriteria criteria = info_criteria(fit.rss, fit.n, fit.k, sigma2_full);
  ComparisonRow row;
  row.model_id = id;
  row.n_regressors = fit.columns.size();
  row.adj_r2 = fit.adj_r_squared;
  row.cp = criteria.cp;
  row.aic = criteria.aic;
  row.bic = criteria.bic;
  return row;
}

void append_cells_from_fit(const std::string& id, const OlsFit& fit,
                           const std::vector<std::string>& features,
                           std::vector<SummaryCell>& cells) {
  for (std::size_t j = 0; j < features.size(); ++j) {
    SummaryCell cell;
    cell.model_id = id;
    cell.feature = features[j];
    const auto it = std::find(fit.columns.begin(), fit.columns.end(), j);
    if (it != fit.columns.end()) {
      const std::size_t position = static_cast<std::size_t>(it - fit.columns.begin());
      cell.sign = fit.coefficients[position] < 0.0 ? CoefficientSign::kNegative
                                                   : CoefficientSign::kPositive;
      cell.significance = significance_from_p(fit.p_values[position]);
    }
    cells.push_back(std::move(cell));
  }
}

// Summary cells regrouped as one row of (possibly null) cells per model,
// models in first-appearance order, features in `features` order.
struct SummaryGrid {
  std::vector<std::string> models;
  std::vector<std::vector<const SummaryCell*>> cells;
};

SummaryGrid group_summary(const std::vector<SummaryCell>& cells,
                          const std::vector<std::string>& features) {
  SummaryGrid grid;
  for (const auto& cell : cells) {
    const auto feature =
        std::find(features.begin(), features.end(), cell.feature);
    if (feature == features.end()) {
      throw ArgumentError("summary: unknown feature code " + cell.feature);
    }
    auto row = std::find(grid.models.begin(), grid.models.end(), cell.model_id);
    if (row == grid.models.end()) {
      grid.models.push_back(cell.model_id);
      grid.cells.emplace_back(features.size(), nullptr);
      row = grid.models.end() - 1;
    }
    const std::size_t i = static_cast<std::size_t>(row - grid.models.begin());
    grid.cells[i][static_cast<std::size_t>(feature - features.begin())] = &cell;
  }
  return grid;
}

ordered_json manifest_configs(const RunManifest& manifest) {
  ordered_json configs;
  configs["corr"]["cutoff"] = manifest.correlation_cutoff;
  if (manifest.lasso_lambda < 0.0) {
    configs["lasso"]["lambda"] = "cv";
  } else {
    configs["lasso"]["lambda"] = manifest.lasso_lambda;
  }
  configs["lasso"]["grid_size"] = 100;
  const BorutaConfig boruta_config;
  configs["boruta"]["max_runs"] = boruta_config.max_runs;
  configs["boruta"]["alpha"] = boruta_config.alpha;
  configs["boruta"]["n_trees"] = boruta_config.n_trees;
  configs["boruta"]["min_node_size"] = boruta_config.min_node_size;
  const AnnealConfig anneal_config;
  configs["sa"]["iterations"] = anneal_config.iterations;
  if (anneal_config.initial_temperature < 0.0) {
    configs["sa"]["initial_temperature"] = "auto";
  } else {
    configs["sa"]["initial_temperature"] = anneal_config.initial_temperature;
  }
  configs["sa"]["cooling_rate"] = anneal_config.cooling_rate;
  configs["sa"]["perturbation_size"] = anneal_config.perturbation_size;
  configs["sa"]["restart_after"] = anneal_config.restart_after;
  const GaConfig ga_config;
  configs["ga"]["population_size"] = ga_config.population_size;
  configs["ga"]["generations"] = ga_config.generations;
  configs["ga"]["crossover_rate"] = ga_config.crossover_rate;
  configs["ga"]["mutation_rate"] = ga_config.mutation_rate;
  configs["ga"]["elitism"] = ga_config.elitism;
  configs["ga"]["tournament_size"] = ga_config.tournament_size;
  return configs;
}

}  // namespace

const std::vector<std::string>& model_ids() {
  static const std::vector<std::string> ids = {
      "full", "pcr",      "corr",    "lasso", "best-subset", "stepwise",
      "rfe",  "ipw-pls",  "boruta",  "sa",    "ga"};
  return ids;
}

Significance significance_from_p(double p) {
  if (p < 0.01) return Significance::kP01;
  if (p < 0.05) return Significance::kP05;
  if (p < 0.1) return Significance::kP10;
  return Significance::kNone;
}

void flag_best_columns(std::vector<ComparisonRow>& rows) {
  if (rows.empty()) return;
  double best_adj_r2 = rows.front().adj_r2;
  double best_cp = rows.front().cp;
  double best_aic = rows.front().aic;
  double best_bic = rows.front().bic;
  for (const auto& row : rows) {
    best_adj_r2 = std::max(best_adj_r2, row.adj_r2);
    best_cp = std::min(best_cp, row.cp);
    best_aic = std::min(best_aic, row.aic);
    best_bic = std::min(best_bic, row.bic);
  }
  for (auto& row : rows) {
    row.best_adj_r2 = row.adj_r2 == best_adj_r2;
    row.best_cp = row.cp == best_cp;
    row.best_aic = row.aic == best_aic;
    row.best_bic = row.bic == best_bic;
  }
}

std::string cell_marker(const SummaryCell& cell) {
  if (cell.sign == CoefficientSign::kAbsent) return "";
  std::string marker = cell.sign == CoefficientSign::kPositive ? "+" : "-";
  switch (cell.significance) {
    case Significance::kP01:
      return marker + "***";
    case Significance::kP05:
      return marker + "**";
    case Significance::kP10:
      return marker + "*";
    case Significance::kNone:
      break;
  }
  return marker;
}

ReportBundle run_pipeline(const PipelineConfig& config) {
  const std::vector<std::string>& ids = model_ids();
  if (std::isnan(config.lasso_lambda) ||
      (config.lasso_lambda >= 0.0 && !std::isfinite(config.lasso_lambda))) {
    throw ArgumentError("run_pipeline: lasso_lambda must be finite");
  }
  if (!(config.correlation_cutoff > 0.0 && config.correlation_cutoff <= 1.0)) {
    throw ArgumentError("run_pipeline: correlation_cutoff must lie in (0, 1]");
  }

  std::vector<std::string> executed;
  if (config.methods.empty()) {
    executed = ids;
  } else {
    for (const auto& id : config.methods) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw ArgumentError("run_pipeline: unknown model id \"" + id + "\"");
      }
      if (std::count(config.methods.begin(), config.methods.end(), id) != 1) {
        throw ArgumentError("run_pipeline: model id \"" + id + "\" listed twice");
      }
    }
    for (const auto& id : ids) {
      if (std::find(config.methods.begin(), config.methods.end(), id) !=
          config.methods.end()) {
        executed.push_back(id);
      }
    }
  }
  const auto runs = [&executed](const std::string& id) {
    return std::find(executed.begin(), executed.end(), id) != executed.end();
  };

  const VariableSchema& schema = VariableSchema::canonical();
  std::map<std::string, std::vector<std::size_t>> pins;
  for (const auto& pin : config.pinned_subsets) {
    if (std::find(ids.begin(), ids.end(), pin.model_id) == ids.end()) {
      throw ArgumentError("run_pipeline: unknown model id \"" + pin.model_id + "\"");
    }
    if (pin.model_id == "full" || pin.model_id == "pcr") {
      throw ArgumentError("run_pipeline: model \"" + pin.model_id +
                          "\" does not take a pinned subset");
    }
    if (!runs(pin.model_id)) {
      throw ArgumentError("run_pipeline: pinned model \"" + pin.model_id +
                          "\" is not being run");
    }
    if (pins.count(pin.model_id) != 0) {
      throw ArgumentError("run_pipeline: model \"" + pin.model_id + "\" pinned twice");
    }
    pins[pin.model_id] = columns_from_codes(schema, pin.features,
                                            "run_pipeline: pin " + pin.model_id);
  }

  ReportBundle bundle;
  bundle.data = standardize(load_csv(config.input_path, schema), schema);
  const Matrix& x = bundle.data.x;
  const Vector& y = bundle.data.y;
  const std::size_t n = bundle.data.n();
  const std::size_t p = bundle.data.p();
  const std::vector<std::string>& features = bundle.data.feature_names;

  const RngStream root(config.seed);
  RngStream fold_rng = root.split(kFoldStream);
  const FoldPlan folds = make_folds(n, config.folds, fold_rng);

  const OlsFit full_fit = ols_fit_all(x, y);
  const double sigma2_full =
      full_fit.rss / static_cast<double>(n - full_fit.k);

  std::vector<std::size_t> all_columns(p);
  for (std::size_t j = 0; j < p; ++j) all_columns[j] = j;

  for (const auto& id : executed) {
    ModelRecord record;
    record.model_id = id;
    if (id == "pcr") {
      const PcrFit pcr = pcr_fit(x, y, folds);
      record.columns = all_columns;
      record.components = pcr.components;
      Vector predicted = matvec(x, pcr.beta);
      double y_mean = 0.0;
      for (const double value : y) y_mean += value;
      y_mean /= static_cast<double>(n);
      double rss = 0.0;
      double tss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        predicted[i] += pcr.intercept;
        rss += (y[i] - predicted[i]) * (y[i] - predicted[i]);
        tss += (y[i] - y_mean) * (y[i] - y_mean);
      }
      const std::size_t k = pcr.components + 1;
      const InfoCriteria criteria = info_criteria(rss, n, k, sigma2_full);
      ComparisonRow row;
      row.model_id = id;
      row.n_regressors = pcr.components;
      row.adj_r2 = 1.0 - (rss / static_cast<double>(n - k)) /
                             (tss / static_cast<double>(n - 1));
      row.cp = criteria.cp;
      row.aic = criteria.aic;
      row.bic = criteria.bic;
      bundle.comparison.push_back(std::move(row));
      for (std::size_t j = 0; j < p; ++j) {
        SummaryCell cell;
        cell.model_id = id;
        cell.feature = features[j];
        if (pcr.beta[j] != 0.0) {
          cell.sign = pcr.beta[j] < 0.0 ? CoefficientSign::kNegative
                                        : CoefficientSign::kPositive;
        }
        bundle.summary.push_back(std::move(cell));
      }
    } else {
      std::vector<std::size_t> columns;
      if (const auto pin = pins.find(id); pin != pins.end()) {
        columns = pin->second;
        record.pinned = true;
      } else if (id == "full") {
        columns = all_columns;
      } else if (id == "corr") {
        columns = correlation_filter(pearson_correlation(x),
                                     config.correlation_cutoff)
                      .kept;
      } else if (id == "lasso") {
        if (config.lasso_lambda >= 0.0) {
          columns = nonzero_support(
              lasso_fit(x, y, config.lasso_lambda).coefficients);
        } else {
          columns = lasso_cv(x, y, folds).support;
        }
      } else if (id == "best-subset") {
        columns = best_subset(x, y, folds).selected;
      } else if (id == "stepwise") {
        columns = stepwise_aic(x, y).selected;
      } else if (id == "rfe") {
        columns = rfe(x, y, folds).selected;
      } else if (id == "ipw-pls") {
        columns = ipw_pls(x, y, folds).selected;
      } else if (id == "boruta") {
        columns = boruta(x, y, BorutaConfig{}, root.split(kBorutaStream)).confirmed;
      } else {  // "ga" and "sa"
        if (id == "sa") {
          columns = anneal_select(x, y, folds, AnnealConfig{},
                                  root.split(kAnnealStream))
                        .selected;
        } else {
          columns =
              ga_select(x, y, folds, GaConfig{}, root.split(kGaStream)).selected;
        }
      }
      record.columns = columns;
      const OlsFit fit = id == "full" ? full_fit : ols_fit(x, y, columns);
      bundle.comparison.push_back(row_from_fit(id, fit, sigma2_full));
      append_cells_from_fit(id, fit, features, bundle.summary);
    }
    bundle.models.push_back(std::move(record));
  }

  flag_best_columns(bundle.comparison);
  bundle.lmg = lmg_importance(x, y);

  bundle.correlation = correlation_with_response(bundle.data);
  bundle.correlation_labels.push_back(schema.response().code);
  for (const auto& code : features) bundle.correlation_labels.push_back(code);

  bundle.manifest.input_path = config.input_path;
  bundle.manifest.seed = config.seed;
  bundle.manifest.folds = config.folds;
  bundle.manifest.methods = executed;
  for (const auto& id : executed) {
    if (const auto pin = pins.find(id); pin != pins.end()) {
      PinnedSubset echoed;
      echoed.model_id = id;
      for (const std::size_t j : pin->second) echoed.features.push_back(features[j]);
      bundle.manifest.pinned_subsets.push_back(std::move(echoed));
    }
  }
  bundle.manifest.lasso_lambda = config.lasso_lambda;
  bundle.manifest.correlation_cutoff = config.correlation_cutoff;
  bundle.manifest.version = kToolVersion;
  return bundle;
}

std::string render_comparison_text(const std::vector<ComparisonRow>& rows) {
  std::size_t id_width = 5;  // "model"
  for (const auto& row : rows) id_width = std::max(id_width, row.model_id.size());
  const auto cell = [](double value, bool flagged) {
    return fixed(value, 4) + (flagged ? "*" : "");
  };
  std::string out;
  std::string line = pad_right("model", id_width) + "  " + pad_left("regressors", 10);
  for (const char* header : {"adj_r2", "cp", "aic", "bic"}) {
    line += "  " + pad_left(header, 12);
  }
  append_line(out, std::move(line));
  for (const auto& row : rows) {
    line = pad_right(row.model_id, id_width) + "  " +
           pad_left(std::to_string(row.n_regressors), 10);
    line += "  " + pad_left(cell(row.adj_r2, row.best_adj_r2), 12);
    line += "  " + pad_left(cell(row.cp, row.best_cp), 12);
    line += "  " + pad_left(cell(row.aic, row.best_aic), 12);
    line += "  " + pad_left(cell(row.bic, row.best_bic), 12);
    append_line(out, std::move(line));
  }
  append_line(out, "(* best column value)");
  return out;
}

std::string render_comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "model,n_regressors,adj_r2,cp,aic,bic,"
      "best_adj_r2,best_cp,best_aic,best_bic\n";
  for (const auto& row : rows) {
    out += row.model_id + ',' + std::to_string(row.n_regressors);
    out += ',' + fixed(row.adj_r2, 6) + ',' + fixed(row.cp, 6);
    out += ',' + fixed(row.aic, 6) + ',' + fixed(row.bic, 6);
    out += row.best_adj_r2 ? ",1" : ",0";
    out += row.best_cp ? ",1" : ",0";
    out += row.best_aic ? ",1" : ",0";
    out += row.best_bic ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

std::string render_comparison_json(const std::vector<ComparisonRow>& rows) {
  ordered_json doc;
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json entry;
    entry["model"] = row.model_id;
    entry["n_regressors"] = row.n_regressors;
    entry["adj_r2"] = printed6(row.adj_r2);
    entry["cp"] = printed6(row.cp);
    entry["aic"] = printed6(row.aic);
    entry["bic"] = printed6(row.bic);
    entry["best_adj_r2"] = row.best_adj_r2;
    entry["best_cp"] = row.best_cp;
    entry["best_aic"] = row.best_aic;
    entry["best_bic"] = row.best_bic;
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string render_summary_text(const std::vector<SummaryCell>& cells,
                                const std::vector<std::string>& features) {
  const SummaryGrid grid = group_summary(cells, features);
  std::size_t id_width = 5;  // "model"
  for (const auto& model : grid.models) id_width = std::max(id_width, model.size());
  std::string out;
  std::string line = pad_right("model", id_width) + "  ";
  for (const auto& feature : features) line += pad_right(feature, 6);
  append_line(out, std::move(line));
  for (std::size_t i = 0; i < grid.models.size(); ++i) {
    line = pad_right(grid.models[i], id_width) + "  ";
    for (const SummaryCell* cell : grid.cells[i]) {
      line += pad_right(cell == nullptr ? "" : cell_marker(*cell), 6);
    }
    append_line(out, std::move(line));
  }
  return out;
}

std::string render_summary_csv(const std::vector<SummaryCell>& cells,
                               const std::vector<std::string>& features) {
  const SummaryGrid grid = group_summary(cells, features);
  std::string out = "model";
  for (const auto& feature : features) out += ',' + feature;
  out += '\n';
  for (std::size_t i = 0; i < grid.models.size(); ++i) {
    out += grid.models[i];
    for (const SummaryCell* cell : grid.cells[i]) {
      out += ',';
      if (cell != nullptr) out += cell_marker(*cell);
    }
    out += '\n';
  }
  return out;
}

std::string render_summary_json(const std::vector<SummaryCell>& cells,
                                const std::vector<std::string>& features) {
  const SummaryGrid grid = group_summary(cells, features);
  ordered_json doc;
  doc["features"] = features;
  doc["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < grid.models.size(); ++i) {
    ordered_json entry;
    entry["model"] = grid.models[i];
    ordered_json row_cells;
    for (std::size_t j = 0; j < features.size(); ++j) {
      const SummaryCell* cell = grid.cells[i][j];
      ordered_json value;
      if (cell == nullptr) {
        value["sign"] = sign_label(CoefficientSign::kAbsent);
        value["significance"] = significance_label(Significance::kNone);
      } else {
        value["sign"] = sign_label(cell->sign);
        value["significance"] = significance_label(cell->significance);
      }
      row_cells[features[j]] = std::move(value);
    }
    entry["cells"] = std::move(row_cells);
    doc["rows"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string render_relaimpo_csv(const RelativeImportance& lmg,
                                const std::vector<std::string>& features) {
  if (lmg.share.size() != features.size()) {
    throw ArgumentError("render_relaimpo_csv: share and feature counts differ");
  }
  if (!(lmg.r2_full > 0.0)) {
    throw ArgumentError("render_relaimpo_csv: full-model R^2 must be positive");
  }
  // Shares are published in units of 1e-6 percent, allocated so the printed
  // column sums to exactly 100.000000: floor every share, then hand the
  // remaining units to the largest fractional parts.
  struct Entry {
    std::size_t feature = 0;
    std::int64_t units = 0;
    double fraction = 0.0;
  };
  const std::int64_t total_units = 100000000;
  const double scale = static_cast<double>(total_units) / lmg.r2_full;
  std::vector<Entry> entries(features.size());
  std::int64_t allocated = 0;
  for (std::size_t j = 0; j < features.size(); ++j) {
    const double raw = std::max(lmg.share[j], 0.0) * scale;
    entries[j].feature = j;
    entries[j].units = static_cast<std::int64_t>(std::floor(raw));
    entries[j].fraction = raw - std::floor(raw);
    allocated += entries[j].units;
  }
  std::vector<std::size_t> order(entries.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&entries](std::size_t a, std::size_t b) {
    if (entries[a].fraction != entries[b].fraction) {
      return entries[a].fraction > entries[b].fraction;
    }
    return a < b;
  });
  for (std::int64_t left = total_units - allocated; left > 0; --left) {
    entries[order[static_cast<std::size_t>(left - 1) % order.size()]].units += 1;
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.units != b.units) return a.units > b.units;
    return a.feature < b.feature;
  });
  std::string out = "feature,share_percent\n";
  for (const auto& entry : entries) {
    out += features[entry.feature] + ',' +
           fixed(static_cast<double>(entry.units) / 1e6, 6) + '\n';
  }
  return out;
}

Matrix correlation_with_response(const StandardizedDataset& data) {
  const std::size_t n = data.n();
  const std::size_t p = data.p();
  Matrix with_response(n, p + 1);
  for (std::size_t i = 0; i < n; ++i) {
    with_response(i, 0) = data.y[i];
    for (std::size_t j = 0; j < p; ++j) with_response(i, j + 1) = data.x(i, j);
  }
  return pearson_correlation(with_response);
}

std::string render_correlation_csv(const Matrix& corr,
                                   const std::vector<std::string>& labels) {
  if (corr.rows() != corr.cols() || corr.rows() != labels.size()) {
    throw ArgumentError("render_correlation_csv: labels must match the matrix");
  }
  std::string out;
  for (const auto& label : labels) out += ',' + label;
  out += '\n';
  for (std::size_t i = 0; i < corr.rows(); ++i) {
    out += labels[i];
    for (std::size_t j = 0; j < corr.cols(); ++j) out += ',' + fixed(corr(i, j), 6);
    out += '\n';
  }
  return out;
}

std::string render_manifest_json(const RunManifest& manifest) {
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = manifest.version;
  doc["input"] = manifest.input_path;
  doc["seed"] = manifest.seed;
  doc["folds"] = manifest.folds;
  doc["methods"] = manifest.methods;
  ordered_json pins = ordered_json::object();
  for (const auto& pin : manifest.pinned_subsets) pins[pin.model_id] = pin.features;
  doc["pinned_subsets"] = std::move(pins);
  ordered_json substreams;
  substreams["folds"] = kFoldStream;
  substreams["boruta"] = kBorutaStream;
  substreams["sa"] = kAnnealStream;
  substreams["ga"] = kGaStream;
  doc["substreams"] = std::move(substreams);
  doc["configs"] = manifest_configs(manifest);
  return doc.dump(2) + "\n";
}

std::string render_fit_text(const OlsFit& fit, const InfoCriteria& criteria,
                            double dw, const std::vector<std::string>& features) {
  std::size_t name_width = 9;  // "intercept"
  for (const std::size_t j : fit.columns) {
    if (j >= features.size()) {
      throw ArgumentError("render_fit_text: column index outside the feature list");
    }
    name_width = std::max(name_width, features[j].size());
  }
  std::string out;
  std::string line = pad_right("term", name_width);
  for (const char* header : {"estimate", "std_error", "t_value", "p_value"}) {
    line += "  " + pad_left(header, 12);
  }
  append_line(out, std::move(line));
  const auto term_line = [&](const std::string& name, double estimate, double se,
                             double t, double prob) {
    std::string row = pad_right(name, name_width);
    for (const double value : {estimate, se, t, prob}) {
      row += "  " + pad_left(fixed(value, 6), 12);
    }
    append_line(out, std::move(row));
  };
  term_line("intercept", fit.intercept, fit.intercept_se, fit.intercept_t,
            fit.intercept_p);
  for (std::size_t position = 0; position < fit.columns.size(); ++position) {
    term_line(features[fit.columns[position]], fit.coefficients[position],
              fit.std_errors[position], fit.t_values[position],
              fit.p_values[position]);
  }
  out += '\n';
  append_line(out, "n " + std::to_string(fit.n) + "   parameters " +
                       std::to_string(fit.k));
  append_line(out, "r_squared " + fixed(fit.r_squared, 6) + "   adj_r_squared " +
                       fixed(fit.adj_r_squared, 6));
  append_line(out, "sigma " + fixed(fit.sigma_hat, 6) + "   durbin_watson " +
                       fixed(dw, 6));
  append_line(out, "f_statistic " + fixed(fit.f_statistic, 6) + "   f_p_value " +
                       fixed(fit.f_p_value, 6));
  append_line(out, "cp " + fixed(criteria.cp, 6) + "   aic " +
                       fixed(criteria.aic, 6) + "   bic " + fixed(criteria.bic, 6));
  return out;
}

std::vector<std::string> write_bundle(const ReportBundle& bundle,
                                      const std::string& out_dir) {
  namespace fs = std::filesystem;
  struct Document {
    const char* name;
    std::string content;
  };
  const std::vector<std::string>& features = bundle.data.feature_names;
  const std::vector<Document> documents = {
      {"comparison.txt", render_comparison_text(bundle.comparison)},
      {"comparison.csv", render_comparison_csv(bundle.comparison)},
      {"comparison.json", render_comparison_json(bundle.comparison)},
      {"summary.txt", render_summary_text(bundle.summary, features)},
      {"summary.csv", render_summary_csv(bundle.summary, features)},
      {"summary.json", render_summary_json(bundle.summary, features)},
      {"relaimpo.csv", render_relaimpo_csv(bundle.lmg, features)},
      {"correlation.csv",
       render_correlation_csv(bundle.correlation, bundle.correlation_labels)},
      {"manifest.json", render_manifest_json(bundle.manifest)},
  };
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw ArgumentError("write_bundle: cannot create " + out_dir + ": " +
                        ec.message());
  }
  std::vector<std::string> written;
  for (const auto& document : documents) {
    const fs::path path = fs::path(out_dir) / document.name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << document.content;
    out.flush();
    if (!out.good()) {
      out.close();
      for (const auto& done : written) fs::remove(done, ec);
      fs::remove(path, ec);
      throw ArgumentError("write_bundle: cannot write " + path.string());
    }
    written.push_back(path.string());
  }
  return written;
}

}  // namespace selekta
