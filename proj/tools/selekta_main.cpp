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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selekta/dataset.hpp"
#include "selekta/errors.hpp"
#include "selekta/filters.hpp"
#include "selekta/linear_model.hpp"
#include "selekta/matrix.hpp"
#include "selekta/report.hpp"

namespace {

using namespace selekta;

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

/// Comma-separated list -> trimmed pieces; empty pieces are rejected.
std::vector<std::string> split_list(const std::string& text, const std::string& context) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string piece =
        trim(comma == std::string::npos ? text.substr(start)
                                        : text.substr(start, comma - start));
    if (piece.empty()) throw ArgumentError(context + ": empty list entry");
    pieces.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return pieces;
}

StandardizedDataset load_standardized(const std::string& path) {
  const VariableSchema& schema = VariableSchema::canonical();
  return standardize(load_csv(path, schema), schema);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out.good()) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    throw ArgumentError("cannot write " + path);
  }
}

struct RunArgs {
  std::string input;
  std::string out_dir;
  std::uint64_t seed = 20211990;
  std::size_t folds = 5;
  std::string methods;
  std::vector<std::string> pins;
  double lasso_lambda = -1.0;
  double correlation_cutoff = 0.75;
};

int do_run(const RunArgs& args) {
  PipelineConfig config;
  config.input_path = args.input;
  config.seed = args.seed;
  config.folds = args.folds;
  config.lasso_lambda = args.lasso_lambda;
  config.correlation_cutoff = args.correlation_cutoff;
  if (!args.methods.empty()) config.methods = split_list(args.methods, "--methods");
  for (const auto& pin : args.pins) {
    const std::size_t eq = pin.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= pin.size()) {
      throw ArgumentError("--pin-subset expects MODEL=F1,F2,... got \"" + pin + "\"");
    }
    PinnedSubset parsed;
    parsed.model_id = trim(pin.substr(0, eq));
    parsed.features = split_list(pin.substr(eq + 1), "--pin-subset " + parsed.model_id);
    config.pinned_subsets.push_back(std::move(parsed));
  }
  const ReportBundle bundle = run_pipeline(config);
  const std::vector<std::string> written = write_bundle(bundle, args.out_dir);
  std::cout << "wrote " << written.size() << " files to " << args.out_dir << "\n";
  return 0;
}

int do_lmg(const std::string& input, const std::string& out_path) {
  const StandardizedDataset data = load_standardized(input);
  const RelativeImportance lmg = lmg_importance(data.x, data.y);
  const std::string csv = render_relaimpo_csv(lmg, data.feature_names);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(out_path, csv);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int do_corr(const std::string& input, const std::string& out_path) {
  const StandardizedDataset data = load_standardized(input);
  std::vector<std::string> labels{VariableSchema::canonical().response().code};
  labels.insert(labels.end(), data.feature_names.begin(), data.feature_names.end());
  const std::string csv =
      render_correlation_csv(correlation_with_response(data), labels);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(out_path, csv);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int do_fit(const std::string& input, const std::string& subset) {
  const StandardizedDataset data = load_standardized(input);
  const VariableSchema& schema = VariableSchema::canonical();
  std::vector<std::size_t> columns;
  if (subset.empty()) {
    for (std::size_t j = 0; j < data.p(); ++j) columns.push_back(j);
  } else {
    for (const auto& code : split_list(subset, "--subset")) {
      columns.push_back(schema.feature_index(code));
    }
    std::vector<std::size_t> sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ArgumentError("--subset: duplicate feature code");
    }
  }
  const OlsFit full = ols_fit_all(data.x, data.y);
  const double sigma2_full =
      full.rss / static_cast<double>(full.n - full.k);
  const OlsFit fit =
      columns.size() == data.p() ? full : ols_fit(data.x, data.y, columns);
  const InfoCriteria criteria = info_criteria(fit.rss, fit.n, fit.k, sigma2_full);
  const double dw = durbin_watson(fit.residuals);
  std::cout << render_fit_text(fit, criteria, dw, data.feature_names);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature-selection and regression workbench for annual indicator tables"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand(
      "run", "Run the selection models and write the report tables");
  run->add_option("--input", run_args.input, "input CSV table")->required();
  run->add_option("--out", run_args.out_dir, "output directory")->required();
  run->add_option("--seed", run_args.seed, "run seed (default 20211990)");
  run->add_option("--folds", run_args.folds, "cross-validation folds (default 5)");
  run->add_option("--methods", run_args.methods,
                  "comma-separated model ids (default: all)");
  run->add_option("--pin-subset", run_args.pins,
                  "MODEL=F1,F2,... fixed subset, bypasses that model's search");
  run->add_option("--lasso-lambda", run_args.lasso_lambda,
                  "fixed penalty (default: cross-validated)");
  run->add_option("--correlation-cutoff", run_args.correlation_cutoff,
                  "pairwise correlation filter cutoff (default 0.75)");

  std::string lmg_input;
  std::string lmg_out;
  CLI::App* lmg = app.add_subcommand(
      "lmg", "Decompose the full model's R^2 into per-feature shares");
  lmg->add_option("--input", lmg_input, "input CSV table")->required();
  lmg->add_option("--out", lmg_out, "output CSV path (default: stdout)");

  std::string corr_input;
  std::string corr_out;
  CLI::App* corr = app.add_subcommand(
      "corr", "Correlation matrix of the response and every feature");
  corr->add_option("--input", corr_input, "input CSV table")->required();
  corr->add_option("--out", corr_out, "output CSV path (default: stdout)");

  std::string fit_input;
  std::string fit_subset;
  CLI::App* fit = app.add_subcommand(
      "fit", "Coefficient display of one least-squares fit");
  fit->add_option("--input", fit_input, "input CSV table")->required();
  fit->add_option("--subset", fit_subset,
                  "comma-separated feature codes (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return do_run(run_args);
    if (lmg->parsed()) return do_lmg(lmg_input, lmg_out);
    if (corr->parsed()) return do_corr(corr_input, corr_out);
    return do_fit(fit_input, fit_subset);
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroVarianceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
