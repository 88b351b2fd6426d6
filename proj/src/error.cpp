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

#include "lhred/error.hpp"

namespace lhred {

const char *to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse: return "parse error";
    case ErrorCode::invalid_parameter: return "invalid parameter";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::length_mismatch: return "length mismatch";
    case ErrorCode::unsupported_term: return "unsupported term";
    case ErrorCode::size_limit: return "size limit exceeded";
    case ErrorCode::io: return "i/o error";
    }
    return "error";
}

namespace {
std::string decorate(ErrorCode code, const std::string &message, int line) {
    std::string out = to_string(code);
    if (line > 0)
        out += " at line " + std::to_string(line);
    out += ": ";
    out += message;
    return out;
}
} // namespace

Error::Error(ErrorCode code, const std::string &message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

} // namespace lhred
