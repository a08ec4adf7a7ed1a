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

#include "genw/error.hpp"

namespace genw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kNotConverged: return "not converged";
    case ErrorCode::kInvalidLauricellaC: return "invalid Lauricella c parameter";
    case ErrorCode::kInvalidCenterQ: return "invalid center q";
    case ErrorCode::kInvalidCenterW: return "invalid center w";
    case ErrorCode::kInconsistentRoutes: return "inconsistent radius routes";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

}  // namespace genw
