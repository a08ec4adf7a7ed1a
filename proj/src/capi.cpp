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

#include "genw.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "genw/error.hpp"
#include "genw/invert.hpp"
#include "genw/io.hpp"
#include "genw/params.hpp"
#include "genw/radius.hpp"
#include "genw/series.hpp"
#include "genw/verify.hpp"

struct genw_params {
  genw::ParamSet value;
};

struct genw_table {
  genw::CoefficientTable value;
};

struct genw_radius_report {
  genw::RadiusReport value;
};

namespace {

thread_local std::string last_error;

genw_status fail(genw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
genw_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return GENW_OK;
  } catch (const genw::Error& e) {
    return fail(static_cast<genw_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GENW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GENW_INTERNAL, e.what());
  }
}

genw::cplx in(genw_complex z) { return {z.re, z.im}; }
genw_complex out_c(genw::cplx z) { return {z.real(), z.imag()}; }

void require(bool ok, const char* what) {
  if (!ok) throw genw::Error(genw::ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void fill(genw_inversion* out, const genw::InversionResult& r) {
  out->z = out_c(r.z);
  out->residual = r.residual;
  out->iterations = r.iterations;
  out->newton_polished = r.method == genw::InversionMethod::kNewtonPolished;
  out->converged = r.converged;
  out->branch_crossed = r.branch_crossed;
  out->series_terms = r.series_terms;
}

std::vector<genw::cplx> read_complex(const genw_complex* v, size_t m) {
  std::vector<genw::cplx> out(m);
  for (size_t i = 0; i < m; ++i) out[i] = in(v[i]);
  return out;
}

}  // namespace

extern "C" {

const char* genw_status_string(genw_status status) {
  return genw::to_string(static_cast<genw::ErrorCode>(status)).data();
}

const char* genw_last_error(void) { return last_error.c_str(); }

void genw_string_free(char* s) { std::free(s); }

genw_status genw_params_create(const genw_complex* t, const genw_complex* p, size_t m,
                               genw_params** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(m == 0 || (t != nullptr && p != nullptr), "null parameter arrays");
    *out = new genw_params{genw::ParamSet(read_complex(t, m), read_complex(p, m))};
  });
}

genw_status genw_params_from_json(const char* json, genw_params** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new genw_params{genw::params_from_json(json)};
  });
}

genw_status genw_params_to_json(const genw_params* params, char** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = dup_string(genw::params_to_json(params->value));
  });
}

size_t genw_params_size(const genw_params* params) { return params ? params->value.size() : 0; }

void genw_params_destroy(genw_params* params) { delete params; }

genw_status genw_forward_map(const genw_params* params, genw_complex z, genw_complex* out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = out_c(genw::forward_map(in(z), params->value));
  });
}

genw_status genw_normalize_general_form(genw_complex t0, genw_complex p0,
                                        const genw_params* params, genw_params** params_out,
                                        genw_complex* argument_scale, genw_complex* root_power,
                                        genw_complex* variable_scale,
                                        genw_complex* variable_shift) {
  return guarded([&] {
    require(params != nullptr && params_out != nullptr, "null argument");
    const auto tr = genw::normalize_general_form(in(t0), in(p0), params->value);
    if (argument_scale) *argument_scale = out_c(tr.argument_scale);
    if (root_power) *root_power = out_c(tr.root_power);
    if (variable_scale) *variable_scale = out_c(tr.variable_scale);
    if (variable_shift) *variable_shift = out_c(tr.variable_shift);
    *params_out = new genw_params{tr.params_out};
  });
}

genw_status genw_table_build(const genw_params* params, unsigned order, unsigned threads,
                             genw_table** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = new genw_table{genw::build_table(params->value, order, threads)};
  });
}

unsigned genw_table_order(const genw_table* table) { return table ? table->value.order() : 0; }

genw_status genw_table_coefficient(const genw_table* table, unsigned n, genw_complex* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    require(n >= 1 && n <= table->value.order(), "n outside [1, order]");
    *out = out_c(table->value.coefficient(n));
  });
}

genw_status genw_table_coefficient_scaled(const genw_table* table, unsigned n,
                                          genw_complex* mantissa, int64_t* exponent) {
  return guarded([&] {
    require(table != nullptr && mantissa != nullptr && exponent != nullptr, "null argument");
    require(n >= 1 && n <= table->value.order(), "n outside [1, order]");
    const auto& c = table->value.scaled_coefficient(n);
    *mantissa = out_c(c.mantissa());
    *exponent = c.exponent();
  });
}

genw_status genw_table_f_value(const genw_table* table, unsigned n, genw_complex* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    require(n >= 1 && n <= table->value.order(), "n outside [1, order]");
    *out = out_c(table->value.f_value(n));
  });
}

genw_status genw_table_export(const genw_table* table, genw_format format, char** out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = dup_string(format == GENW_FORMAT_CSV ? genw::table_to_csv(table->value)
                                                : genw::table_to_json(table->value));
  });
}

void genw_table_destroy(genw_table* table) { delete table; }

genw_status genw_evaluate_series(const genw_table* table, genw_complex x, unsigned n_terms,
                                 genw_complex* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = out_c(n_terms == 0 ? genw::evaluate_series(in(x), table->value)
                              : genw::evaluate_series(in(x), table->value, n_terms));
  });
}

genw_status genw_newton_invert(const genw_params* params, genw_complex w, genw_complex z0,
                               double tol, unsigned max_iter, genw_inversion* out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    fill(out, genw::newton_invert(in(w), in(z0), params->value, tol, max_iter));
  });
}

genw_status genw_generalized_w(const genw_table* table, genw_complex w, double tol,
                               unsigned max_iter, genw_inversion* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    fill(out, genw::generalized_w(in(w), table->value, tol, max_iter));
  });
}

genw_status genw_empirical_radius(const genw_table* table, unsigned lo, unsigned hi, int envelope,
                                  int log_correction, double* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    genw::EmpiricalOptions options;
    options.lo = lo;
    options.hi = hi;
    options.envelope = envelope != 0;
    options.log_correction = log_correction != 0;
    *out = genw::empirical_radius(table->value, options);
  });
}

genw_status genw_radius_report_create(const genw_params* params, unsigned order,
                                      genw_radius_report** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    *out = new genw_radius_report{genw::radius_report(params->value, order)};
  });
}

genw_status genw_radius_report_from_table(const genw_table* table, genw_radius_report** out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = new genw_radius_report{genw::radius_report(table->value)};
  });
}

double genw_radius_report_empirical(const genw_radius_report* report) {
  return report ? report->value.empirical : std::numeric_limits<double>::quiet_NaN();
}

double genw_radius_report_best(const genw_radius_report* report) {
  if (!report || !report->value.best_match) return std::numeric_limits<double>::quiet_NaN();
  return report->value.candidates[*report->value.best_match].radius.value;
}

double genw_radius_report_relative_gap(const genw_radius_report* report) {
  return report ? report->value.relative_gap : std::numeric_limits<double>::quiet_NaN();
}

int genw_radius_report_matched(const genw_radius_report* report) {
  return report && report->value.matched;
}

size_t genw_radius_report_saddle_count(const genw_radius_report* report) {
  return report ? report->value.saddles.size() : 0;
}

genw_status genw_radius_report_saddle(const genw_radius_report* report, size_t index,
                                      genw_complex* lambda) {
  return guarded([&] {
    require(report != nullptr && lambda != nullptr, "null argument");
    require(index < report->value.saddles.size(), "saddle index out of range");
    const auto& sp = report->value.saddles[index];
    for (size_t i = 0; i < sp.lambda.size(); ++i) lambda[i] = out_c(sp.lambda[i]);
  });
}

genw_status genw_radius_report_export(const genw_radius_report* report, genw_format format,
                                      char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = dup_string(format == GENW_FORMAT_CSV ? genw::report_to_csv(report->value)
                                                : genw::report_to_json(report->value));
  });
}

genw_status genw_radius_report_plot_csv(const genw_radius_report* report, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = dup_string(genw::report_plot_csv(report->value));
  });
}

void genw_radius_report_destroy(genw_radius_report* report) { delete report; }

genw_status genw_verify(uint64_t seed, genw_format format, char** out, int* all_passed) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    genw::VerifyOptions options;
    options.seed = seed;
    const auto report = genw::run_verification(options);
    if (all_passed) *all_passed = report.passed();
    *out = dup_string(format == GENW_FORMAT_CSV ? genw::verify_to_csv(report)
                                                : genw::verify_to_json(report));
  });
}

genw_status genw_asymptotics(const genw_params* params, const double* lambda, size_t lambda_len,
                             const unsigned* orders, size_t n_orders, genw_format format,
                             char** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    require(lambda_len == 0 || lambda != nullptr, "null lambda");
    require(n_orders > 0 && orders != nullptr, "no orders given");
    const auto rows = genw::asymptotics_table(params->value, {lambda, lambda_len},
                                              {orders, n_orders});
    *out = dup_string(format == GENW_FORMAT_CSV ? genw::asymptotics_to_csv(rows)
                                                : genw::asymptotics_to_json(params->value, rows));
  });
}

}  // extern "C"
