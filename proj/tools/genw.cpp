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

// genw: command-line front end over the C interface.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genw.h"

namespace {

enum Exit { kExitOk = 0, kExitValidation = 1, kExitVerifyFailed = 2 };

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamsDeleter {
  void operator()(genw_params* p) const { genw_params_destroy(p); }
};
struct TableDeleter {
  void operator()(genw_table* t) const { genw_table_destroy(t); }
};
struct ReportDeleter {
  void operator()(genw_radius_report* r) const { genw_radius_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { genw_string_free(s); }
};
using ParamsPtr = std::unique_ptr<genw_params, ParamsDeleter>;
using TablePtr = std::unique_ptr<genw_table, TableDeleter>;
using ReportPtr = std::unique_ptr<genw_radius_report, ReportDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(genw_status status) {
  if (status != GENW_OK)
    throw Failure(std::string(genw_status_string(status)) + ": " + genw_last_error());
}

std::string take(char* s) { return OwnedString(s).get(); }

genw_complex parse_complex(const std::string& text, const std::string& flag) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  if (!(is >> re)) throw Failure(flag + ": cannot read \"" + text + "\" as re,im");
  if (!(is >> im)) {
    if (!is.eof()) throw Failure(flag + ": cannot read \"" + text + "\" as re,im");
    im = 0.0;
  }
  std::string rest;
  if (is.clear(), is >> rest) throw Failure(flag + ": trailing input in \"" + text + "\"");
  return {re, im};
}

// Each flag value may hold several entries separated by ';'.
std::vector<genw_complex> parse_complex_list(const std::vector<std::string>& values,
                                             const std::string& flag) {
  std::vector<genw_complex> out;
  for (const auto& v : values) {
    std::size_t start = 0;
    while (start <= v.size()) {
      const std::size_t end = std::min(v.find(';', start), v.size());
      const std::string item = v.substr(start, end - start);
      if (!item.empty()) out.push_back(parse_complex(item, flag));
      start = end + 1;
    }
  }
  return out;
}

struct Options {
  std::string params_file;
  std::vector<std::string> t, p;
  unsigned n = 0;
  std::string x, w;
  double tol = 1e-13;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
  std::string plot_out;
  std::vector<unsigned> orders{50, 100, 200, 400};
  std::vector<double> lambda;
  unsigned threads = 0;
};

ParamsPtr load_params(const Options& o) {
  genw_params* raw = nullptr;
  if (!o.params_file.empty()) {
    if (!o.t.empty() || !o.p.empty()) throw Failure("--params cannot be combined with --t/--p");
    std::ifstream in(o.params_file);
    if (!in) throw Failure("--params: cannot open " + o.params_file);
    std::stringstream buf;
    buf << in.rdbuf();
    check(genw_params_from_json(buf.str().c_str(), &raw));
    return ParamsPtr(raw);
  }
  const auto t = parse_complex_list(o.t, "--t");
  const auto p = parse_complex_list(o.p, "--p");
  if (t.size() != p.size())
    throw Failure("--t and --p give " + std::to_string(t.size()) + " and " +
                  std::to_string(p.size()) + " entries");
  check(genw_params_create(t.data(), p.data(), t.size(), &raw));
  return ParamsPtr(raw);
}

genw_format format_of(const Options& o) {
  return o.format == "csv" ? GENW_FORMAT_CSV : GENW_FORMAT_JSON;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json pair(genw_complex z) { return nlohmann::json::array({z.re, z.im}); }

TablePtr table_for(const genw_params* params, unsigned n, unsigned threads) {
  genw_table* raw = nullptr;
  check(genw_table_build(params, n, threads, &raw));
  return TablePtr(raw);
}

std::string run_coeffs(const Options& o) {
  auto params = load_params(o);
  auto table = table_for(params.get(), o.n ? o.n : 20, o.threads);
  char* s = nullptr;
  check(genw_table_export(table.get(), format_of(o), &s));
  return take(s);
}

std::string run_eval(const Options& o) {
  if (o.x.empty()) throw Failure("eval needs --x re,im");
  const genw_complex x = parse_complex(o.x, "--x");
  const unsigned n = o.n ? o.n : 40;
  auto params = load_params(o);
  auto table = table_for(params.get(), n, o.threads);
  genw_complex value{}, back{};
  check(genw_evaluate_series(table.get(), x, n, &value));
  check(genw_forward_map(params.get(), value, &back));
  const double residual = std::hypot(back.re - x.re, back.im - x.im);
  const double size = std::hypot(x.re, x.im);
  const double relative = size > 0.0 ? residual / size : residual;
  if (o.format == "csv") {
    return "re_x,im_x,N,re_value,im_value,residual,relative_residual\n" + g17(x.re) + ',' +
           g17(x.im) + ',' + std::to_string(n) + ',' + g17(value.re) + ',' + g17(value.im) + ',' +
           g17(residual) + ',' + g17(relative) + '\n';
  }
  nlohmann::json doc{{"x", pair(x)},
                     {"N", n},
                     {"value", pair(value)},
                     {"residual", residual},
                     {"relative_residual", relative}};
  return doc.dump(2) + '\n';
}

std::string run_invert(const Options& o) {
  if (o.w.empty()) throw Failure("invert needs --w re,im");
  const genw_complex w = parse_complex(o.w, "--w");
  const unsigned n = o.n ? o.n : 40;
  auto params = load_params(o);
  auto table = table_for(params.get(), n, o.threads);
  genw_inversion r{};
  check(genw_generalized_w(table.get(), w, o.tol, 100, &r));
  const char* method = r.newton_polished ? "newton_polished" : "series_only";
  if (o.format == "csv") {
    return "re_w,im_w,re_z,im_z,residual,iterations,method,converged,branch_crossed,series_terms\n" +
           g17(w.re) + ',' + g17(w.im) + ',' + g17(r.z.re) + ',' + g17(r.z.im) + ',' +
           g17(r.residual) + ',' + std::to_string(r.iterations) + ',' + method + ',' +
           std::to_string(r.converged) + ',' + std::to_string(r.branch_crossed) + ',' +
           std::to_string(r.series_terms) + '\n';
  }
  nlohmann::json doc{{"w", pair(w)},
                     {"z", pair(r.z)},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"method", method},
                     {"converged", r.converged != 0},
                     {"branch_crossed", r.branch_crossed != 0},
                     {"series_terms", r.series_terms}};
  return doc.dump(2) + '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure("cannot write " + path);
  f << text;
}

std::string run_radius(const Options& o) {
  auto params = load_params(o);
  auto table = table_for(params.get(), o.n ? o.n : 300, o.threads);
  genw_radius_report* raw = nullptr;
  check(genw_radius_report_from_table(table.get(), &raw));
  ReportPtr report(raw);
  if (!o.plot_out.empty()) {
    char* plot = nullptr;
    check(genw_radius_report_plot_csv(report.get(), &plot));
    write_file(o.plot_out, take(plot));
  }
  char* s = nullptr;
  check(genw_radius_report_export(report.get(), format_of(o), &s));
  std::string text = take(s);
  if (o.format == "json") text += '\n';
  return text;
}

std::string run_verify(const Options& o, int& exit_code) {
  char* s = nullptr;
  int passed = 0;
  check(genw_verify(o.seed, format_of(o), &s, &passed));
  if (!passed) exit_code = kExitVerifyFailed;
  std::string text = take(s);
  if (o.format == "json") text += '\n';
  return text;
}

std::string run_asymptotics(const Options& o) {
  auto params = load_params(o);
  char* s = nullptr;
  check(genw_asymptotics(params.get(), o.lambda.data(), o.lambda.size(), o.orders.data(),
                         o.orders.size(), format_of(o), &s));
  std::string text = take(s);
  if (o.format == "json") text += '\n';
  return text;
}

void add_common(CLI::App* cmd, Options& o, bool with_params = true) {
  if (with_params) {
    cmd->add_option("--params", o.params_file, "JSON file {\"t\": [[re,im],...], \"p\": [...]}");
    cmd->add_option("--t", o.t, "roots t_i as re,im (repeat or separate with ';')");
    cmd->add_option("--p", o.p, "exponents p_i as re,im (repeat or separate with ';')");
    cmd->add_option("--threads", o.threads, "worker threads for the coefficient table (0: all)");
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Lambert W: series coefficients, inversion and radius diagnostics"};
  app.require_subcommand(1);
  Options o;

  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients c_n and F_n");
  add_common(coeffs, o);
  coeffs->add_option("--n", o.n, "highest order N (default 20)")->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "partial sum of the inverse series at x");
  add_common(eval, o);
  eval->add_option("--n", o.n, "terms N (default 40)")->check(CLI::PositiveNumber);
  eval->add_option("--x", o.x, "argument re,im")->required();

  auto* invert = app.add_subcommand("invert", "solve f(z) = w on the branch through 0");
  add_common(invert, o);
  invert->add_option("--n", o.n, "series terms for the seed (default 40)")
      ->check(CLI::PositiveNumber);
  invert->add_option("--w", o.w, "right-hand side re,im")->required();
  invert->add_option("--tol", o.tol, "absolute residual tolerance")
      ->check(CLI::PositiveNumber);

  auto* radius = app.add_subcommand("radius", "conjectured against empirical radius");
  add_common(radius, o);
  radius->add_option("--n", o.n, "order N (default 300, at least 50)")
      ->check(CLI::Range(50u, 100000u));
  radius->add_option("--plot-out", o.plot_out, "also write n, log|c_n|, n log(1/R) CSV here");

  auto* verify = app.add_subcommand("verify", "randomized identity and brute-force checks");
  add_common(verify, o, false);
  verify->add_option("--seed", o.seed, "random seed");

  auto* asym = app.add_subcommand("asymptotics", "exact against asymptotic a_n(k)");
  add_common(asym, o);
  asym->add_option("--orders", o.orders, "orders n")->delimiter(',');
  asym->add_option("--lambda", o.lambda, "lambda_i = k_i / n (default 1/(m+1))")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  int exit_code = kExitOk;
  std::string text;
  try {
    if (*coeffs) text = run_coeffs(o);
    else if (*eval) text = run_eval(o);
    else if (*invert) text = run_invert(o);
    else if (*radius) text = run_radius(o);
    else if (*verify) text = run_verify(o, exit_code);
    else text = run_asymptotics(o);

    if (o.out.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      write_file(o.out, text);
    }
  } catch (const Failure& e) {
    std::cerr << "genw: " << e.what() << '\n';
    return kExitValidation;
  }
  return exit_code;
}
