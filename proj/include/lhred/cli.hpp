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

#include <ostream>
#include <string>
#include <vector>

namespace lhred::cli {

/// Exit statuses shared by every subcommand. decide additionally returns
/// case2 / promise_violation.
enum ExitStatus : int {
    ok = 0,
    case2 = 1,
    failure = 2,
    promise_violation = 3,
};

/// Runs one command line (program name excluded). Report lines go to \p out
/// as stable key=value text; diagnostics and timing go to \p err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lhred::cli
