// Copyright 2026 The ghzpurify Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ghzpurify {

// Numeric values match the GHZP_E_* status codes of the C API.
enum class ErrorCode {
    invalid_arity = 1,
    invalid_argument = 2,
    degenerate_branch = 3,
    contract_violation = 4,
    invalid_subset = 5,
    topology = 6,
    size_cap = 7,
    parse = 8,
    validation = 9,
    infeasible = 10,
    io = 11,
    internal = 12,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace ghzpurify
