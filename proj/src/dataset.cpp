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

#include "selekta/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "selekta/errors.hpp"

namespace selekta {

VariableSchema::VariableSchema(Variable response, std::vector<Variable> features)
    : response_(std::move(response)), features_(std::move(features)) {
  if (features_.empty()) throw ArgumentError("schema: needs at least one feature");
}

const VariableSchema& VariableSchema::canonical() {
  static const VariableSchema schema(
      {"REC", "Renewable energy consumption", "% of total final energy consumption",
       "WDI"},
      {
          {"CO2", "Carbon dioxide emissions", "metric tons per capita", "WDI"},
          {"DINV", "Domestic investment (gross capital formation)", "% of GDP", "WDI"},
          {"EG", "Economic growth (GDP per capita growth)", "annual %", "WDI"},
          {"EXR", "Official exchange rate", "LCU per US dollar, period average", "WDI"},
          {"FDEV", "Financial development (domestic credit to private sector)",
           "% of GDP", "WDI"},
          {"FDI", "Foreign direct investment, net inflows", "% of GDP", "WDI"},
          {"INC", "Income (GDP per capita)", "constant 2015 US dollars", "WDI"},
          {"IND", "Industrialization (industry value added)", "% of GDP", "WDI"},
          {"INFL", "Inflation (consumer prices)", "annual %", "WDI"},
          {"TOUR", "International tourism arrivals", "number of arrivals", "WDI"},
          {"TR", "Trade openness (imports plus exports)", "% of GDP", "WDI"},
          {"URB", "Urbanization (urban population)", "% of total population", "WDI"},
      });
  return schema;
}

std::vector<std::string> VariableSchema::feature_codes() const {
  std::vector<std::string> codes;
  codes.reserve(features_.size());
  for (const auto& f : features_) codes.push_back(f.code);
  return codes;
}

bool VariableSchema::has_feature(const std::string& code) const {
  for (const auto& f : features_)
    if (f.code == code) return true;
  return false;
}

std::size_t VariableSchema::feature_index(const std::string& code) const {
  for (std::size_t j = 0; j < features_.size(); ++j)
    if (features_[j].code == code) return j;
  throw ArgumentError("unknown feature code '" + code + "'");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text, std::size_t line, const std::string& column) {
  if (text.empty())
    throw LoadError("missing value at line " + std::to_string(line) + ", column " + column,
                    line, column);
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + text.size() || !std::isfinite(value))
    throw LoadError("invalid number '" + text + "' at line " + std::to_string(line) +
                        ", column " + column,
                    line, column);
  return value;
}

}  // namespace

RawTable parse_csv(const std::string& text, const VariableSchema& schema) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::stringstream ss(text);
    while (std::getline(ss, line)) lines.push_back(line);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw LoadError("empty input");

  const std::vector<std::string> header = split_fields(lines[0]);
  std::vector<std::string> required = {"YEAR", schema.response().code};
  for (const auto& f : schema.features()) required.push_back(f.code);

  for (const auto& name : header) {
    if (std::count(header.begin(), header.end(), name) > 1)
      throw LoadError("duplicate column '" + name + "' in header", 1, name);
    if (std::find(required.begin(), required.end(), name) == required.end())
      throw LoadError("unknown column '" + name + "' in header", 1, name);
  }
  for (const auto& name : required) {
    if (std::find(header.begin(), header.end(), name) == header.end())
      throw LoadError("missing column '" + name + "' in header", 1, name);
  }

  auto column_of = [&](const std::string& name) {
    return static_cast<std::size_t>(
        std::find(header.begin(), header.end(), name) - header.begin());
  };
  const std::size_t year_col = column_of("YEAR");
  const std::size_t response_col = column_of(schema.response().code);
  std::vector<std::size_t> feature_cols;
  for (const auto& f : schema.features()) feature_cols.push_back(column_of(f.code));

  const std::size_t n = lines.size() - 1;
  if (n < 3) throw LoadError("need at least 3 data rows, found " + std::to_string(n));

  RawTable table;
  table.years.resize(n);
  table.response.resize(n);
  table.features = Matrix(n, schema.feature_count());

  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t line_no = r + 2;  // 1-based, after the header
    const std::vector<std::string> fields = split_fields(lines[r + 1]);
    if (fields.size() != header.size())
      throw LoadError("line " + std::to_string(line_no) + " has " +
                          std::to_string(fields.size()) + " fields, expected " +
                          std::to_string(header.size()),
                      line_no, "");

    const double year = parse_number(fields[year_col], line_no, "YEAR");
    if (year != std::floor(year))
      throw LoadError("YEAR must be an integer at line " + std::to_string(line_no),
                      line_no, "YEAR");
    table.years[r] = static_cast<int>(year);
    if (r > 0 && table.years[r] <= table.years[r - 1])
      throw LoadError("years must be strictly increasing at line " +
                          std::to_string(line_no),
                      line_no, "YEAR");

    table.response[r] =
        parse_number(fields[response_col], line_no, schema.response().code);
    for (std::size_t j = 0; j < feature_cols.size(); ++j)
      table.features(r, j) =
          parse_number(fields[feature_cols[j]], line_no, schema.features()[j].code);
  }
  return table;
}

RawTable load_csv(const std::string& path, const VariableSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), schema);
}

namespace {

struct Moments {
  double mean;
  double sd;
};

Moments column_moments(const Vector& v) {
  const auto n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

StandardizedDataset standardize(const RawTable& table, const VariableSchema& schema) {
  const std::size_t n = table.n();
  if (n < 2) throw ArgumentError("standardize: need at least 2 rows");
  if (table.features.rows() != n || table.response.size() != n)
    throw ArgumentError("standardize: inconsistent table");

  StandardizedDataset out;
  out.years = table.years;
  out.feature_names = schema.feature_codes();

  const Moments my = column_moments(table.response);
  if (my.sd == 0.0)
    throw ZeroVarianceError("response column " + schema.response().code + " is constant",
                            schema.response().code);
  out.y_mean = my.mean;
  out.y_sd = my.sd;
  out.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.y[i] = (table.response[i] - my.mean) / my.sd;

  const std::size_t p = schema.feature_count();
  out.x = Matrix(n, p);
  out.x_mean.resize(p);
  out.x_sd.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    const Moments m = column_moments(table.features.col(j));
    if (m.sd == 0.0)
      throw ZeroVarianceError("feature column " + schema.features()[j].code +
                                  " is constant",
                              schema.features()[j].code);
    out.x_mean[j] = m.mean;
    out.x_sd[j] = m.sd;
    for (std::size_t i = 0; i < n; ++i)
      out.x(i, j) = (table.features(i, j) - m.mean) / m.sd;
  }
  return out;
}

FoldPlan make_folds(std::size_t n, std::size_t k, RngStream& rng) {
  if (k < 2) throw ArgumentError("make_folds: k must be at least 2");
  if (k > n) throw ArgumentError("make_folds: k must not exceed the number of rows");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  FoldPlan folds(k);
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  std::size_t next = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    folds[f].assign(order.begin() + next, order.begin() + next + size);
    std::sort(folds[f].begin(), folds[f].end());
    next += size;
  }
  return folds;
}

}  // namespace selekta
