// Copyright 2026 The hodge-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HODGE_BOUNDS_ERROR_HPP
#define HODGE_BOUNDS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hodge {

// Mirrors hb_status in the C API; the numeric values are part of that ABI.
enum class ErrorCode : int {
  InvalidArgument = 1,
  Parse = 2,
  Symmetry = 3,
  Hypothesis = 4,
  Inapplicable = 5,
  SearchLimit = 6,
  NotQuadratic = 7,
  Mismatch = 8,
  Unassigned = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hodge

#endif  // HODGE_BOUNDS_ERROR_HPP
