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

#include "error.hpp"

namespace ghzpurify {

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_arity:
            return "invalid arity";
        case ErrorCode::invalid_argument:
            return "invalid argument";
        case ErrorCode::degenerate_branch:
            return "degenerate branch";
        case ErrorCode::contract_violation:
            return "contract violation";
        case ErrorCode::invalid_subset:
            return "invalid subset";
        case ErrorCode::topology:
            return "topology error";
        case ErrorCode::size_cap:
            return "size cap exceeded";
        case ErrorCode::parse:
            return "parse error";
        case ErrorCode::validation:
            return "validation error";
        case ErrorCode::infeasible:
            return "infeasible";
        case ErrorCode::io:
            return "i/o error";
        case ErrorCode::internal:
            return "internal error";
    }
    return "unknown error";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace ghzpurify
