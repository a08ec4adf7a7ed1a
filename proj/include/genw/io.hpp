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

#ifndef GENW_IO_HPP_
#define GENW_IO_HPP_

#include <string>
#include <string_view>

#include "genw/params.hpp"
#include "genw/radius.hpp"
#include "genw/series.hpp"

namespace genw {

/// {"t": [[re, im], ...], "p": [[re, im], ...]}. A bare number is accepted as
/// a real entry. Throws Error(kParse) with the offending field in the message,
/// or Error(kInvalidArgument) if the values themselves are rejected.
ParamSet params_from_json(std::string_view text);
std::string params_to_json(const ParamSet& params);

/// Columns n, re_c, im_c, re_F, im_F with 17 significant digits.
std::string table_to_csv(const CoefficientTable& table);
std::string table_to_json(const CoefficientTable& table);

std::string report_to_json(const RadiusReport& report);
/// One row per (saddle, l) candidate.
std::string report_to_csv(const RadiusReport& report);
/// Columns n, log_abs_c, n_log_inv_R: the coefficient growth against the
/// straight line predicted by the best-matching candidate.
std::string report_plot_csv(const RadiusReport& report);

/// printf("%.17g"), with nan / inf spelled out.
std::string format_double(double x);

}  // namespace genw

#endif  // GENW_IO_HPP_
