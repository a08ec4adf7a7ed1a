// Copyright 2026 The genw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genw/io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "genw/error.hpp"

namespace genw {
namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json complex_list(std::span<const cplx> v) {
  json out = json::array();
  for (cplx z : v) out.push_back(complex_json(z));
  return out;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<cplx> read_complex_list(const json& doc, const char* field) {
  if (!doc.contains(field)) throw Error(ErrorCode::kParse, std::string("missing field \"") + field + "\"");
  const json& arr = doc.at(field);
  if (!arr.is_array())
    throw Error(ErrorCode::kParse, std::string("field \"") + field + "\" must be an array");
  std::vector<cplx> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    const std::string where = std::string("field \"") + field + "\"[" + std::to_string(i) + "]";
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      out.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw Error(ErrorCode::kParse, where + ": expected a number or an [re, im] pair");
    }
  }
  return out;
}

json params_json(const ParamSet& params) {
  return json{{"t", complex_list(params.roots())}, {"p", complex_list(params.exponents())}};
}

void append_row(std::string& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ',';
    out += c;
    first = false;
  }
  out += '\n';
}

std::string bool_cell(bool b) { return b ? "1" : "0"; }

double plotted_radius(const RadiusReport& report) {
  if (report.best_match) return report.candidates[*report.best_match].radius.value;
  if (report.direct_prediction) return *report.direct_prediction;
  return report.empirical;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ParamSet params_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "parameters must be a JSON object");
  auto t = read_complex_list(doc, "t");
  auto p = read_complex_list(doc, "p");
  if (t.size() != p.size()) {
    throw Error(ErrorCode::kParse, "fields \"t\" and \"p\" differ in length (" +
                                       std::to_string(t.size()) + " vs " +
                                       std::to_string(p.size()) + ")");
  }
  return ParamSet(std::move(t), std::move(p));
}

std::string params_to_json(const ParamSet& params) { return params_json(params).dump(); }

std::string table_to_csv(const CoefficientTable& table) {
  std::string out = "n,re_c,im_c,re_F,im_F\n";
  for (unsigned n = 1; n <= table.order(); ++n) {
    const cplx c = table.coefficient(n);
    const cplx f = table.f_value(n);
    append_row(out, {std::to_string(n), format_double(c.real()), format_double(c.imag()),
                     format_double(f.real()), format_double(f.imag())});
  }
  return out;
}

std::string table_to_json(const CoefficientTable& table) {
  json rows = json::array();
  for (unsigned n = 1; n <= table.order(); ++n) {
    const ScaledComplex& c = table.scaled_coefficient(n);
    const ScaledComplex& f = table.scaled_f_value(n);
    rows.push_back(json{{"n", n},
                        {"c", complex_json(c.to_complex())},
                        {"F", complex_json(f.to_complex())},
                        {"log_abs_c", number_or_null(c.log_abs())}});
  }
  json doc{{"params", params_json(table.params())}, {"N", table.order()}, {"coefficients", rows}};
  return doc.dump(2);
}

std::string report_to_json(const RadiusReport& report) {
  json saddles = json::array();
  for (const auto& sp : report.saddles) {
    saddles.push_back(json{{"lambda", complex_list(sp.lambda)},
                           {"s", complex_json(sp.s)},
                           {"residuals", sp.residuals},
                           {"g", complex_json(sp.g_value)},
                           {"log_branch_offsets", sp.offsets.offsets},
                           {"offset_defect", number_or_null(sp.offsets.max_defect)},
                           {"offsets_anomalous", sp.offsets.anomalous},
                           {"hessian_condition", sp.hessian_condition},
                           {"degenerate", sp.degenerate},
                           {"converged", sp.converged}});
  }
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    json entry{{"saddle", c.saddle},
               {"l", c.l},
               {"R", c.radius.value},
               {"R_exponent_route", c.radius.via_exponent},
               {"R_displayed", number_or_null(c.radius.displayed)},
               {"route_gap", c.radius.route_gap},
               {"consistent", c.radius.consistent},
               {"direct", c.direct},
               {"relative_gap", c.relative_gap}};
    if (c.saddle < report.saddles.size())
      entry["lambda"] = complex_list(report.saddles[c.saddle].lambda);
    else
      entry["lambda"] = json::array();
    candidates.push_back(std::move(entry));
  }
  json doc{{"params", params_json(report.params)},
           {"N", report.order},
           {"fit_window", {report.window_lo, report.window_hi}},
           {"empirical", report.empirical},
           {"saddles", saddles},
           {"conjectured", candidates},
           {"best_match", report.best_match ? json(*report.best_match) : json(nullptr)},
           {"relative_gap", report.relative_gap},
           {"match_tolerance", report.match_tolerance},
           {"matched", report.matched},
           {"direct_prediction",
            report.direct_prediction ? json(*report.direct_prediction) : json(nullptr)},
           {"notes", report.notes}};
  return doc.dump(2);
}

std::string report_to_csv(const RadiusReport& report) {
  const std::size_t m = report.params.size();
  std::string out = "saddle";
  for (std::size_t i = 1; i <= m; ++i)
    out += ",re_lambda_" + std::to_string(i) + ",im_lambda_" + std::to_string(i);
  for (std::size_t i = 1; i <= m; ++i) out += ",l_" + std::to_string(i);
  out += ",R,R_exponent_route,R_displayed,route_gap,direct,relative_gap,best\n";
  for (std::size_t k = 0; k < report.candidates.size(); ++k) {
    const auto& c = report.candidates[k];
    std::string row = std::to_string(c.saddle);
    for (std::size_t i = 0; i < m; ++i) {
      const cplx v = report.saddles[c.saddle].lambda[i];
      row += ',' + format_double(v.real()) + ',' + format_double(v.imag());
    }
    for (std::size_t i = 0; i < m; ++i) row += ',' + std::to_string(c.l[i]);
    out += row + ',';
    append_row(out, {format_double(c.radius.value), format_double(c.radius.via_exponent),
                     format_double(c.radius.displayed), format_double(c.radius.route_gap),
                     bool_cell(c.direct), format_double(c.relative_gap),
                     bool_cell(report.best_match == k)});
  }
  return out;
}

std::string report_plot_csv(const RadiusReport& report) {
  const double slope = -std::log(plotted_radius(report));
  std::string out = "n,log_abs_c,n_log_inv_R\n";
  for (std::size_t i = 0; i < report.log_abs_coefficients.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    append_row(out, {std::to_string(i + 1), format_double(report.log_abs_coefficients[i]),
                     format_double(n * slope)});
  }
  return out;
}

}  // namespace genw
