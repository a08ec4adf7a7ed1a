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

#ifndef GENW_ERROR_HPP_
#define GENW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace genw {

// Numeric values are shared with genw_status in genw.h.
enum class ErrorCode {
  kOk = 0,
  kInvalidArgument = 1,
  kDomain = 2,
  kParse = 3,
  kNotConverged = 4,
  kInvalidLauricellaC = 5,
  kInvalidCenterQ = 6,
  kInvalidCenterW = 7,
  kInconsistentRoutes = 8,
  kInternal = 9,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genw

#endif  // GENW_ERROR_HPP_
