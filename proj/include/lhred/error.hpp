// Copyright 2026 The lhred Authors
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

namespace lhred {

enum class ErrorCode {
    parse,
    invalid_parameter,
    out_of_range,
    length_mismatch,
    unsupported_term,
    size_limit,
    io,
};

const char *to_string(ErrorCode code);

/// Every failure raised by the library. Parse errors carry the 1-based line
/// number of the offending input line (0 when not tied to a line).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message, int line = 0);

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    ErrorCode code_;
    int line_;
};

} // namespace lhred
