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

#include <optional>

#include "lhred/graph.hpp"
#include "lhred/operator.hpp"
#include "lhred/oracles.hpp"
#include "lhred/reductions.hpp"

namespace lhred {

/// Absolute slack applied to floating-point eigenvalues before comparing them
/// with the thresholds.
inline constexpr double dense_guard_band = 1e-9;

enum class Outcome {
    /// Some eigenvalue is <= a.
    case1,
    /// Every eigenvalue is > b.
    case2,
    /// The least eigenvalue lies in (a, b]: neither promised case holds.
    promise_violation,
};

const char *to_string(Outcome outcome);

enum class SolveMethod { enumeration, dense };

struct Decision {
    Outcome outcome = Outcome::promise_violation;
    EnergyValue min_energy;
    /// Minimising basis state; absent on the dense path.
    std::optional<Assignment> witness;
    SolveMethod method = SolveMethod::enumeration;
};

/// Resolves the promise problem for H. Diagonal Hamiltonians are solved by
/// enumeration with exact quarter-integer comparisons whenever the energies
/// are exact; other Hamiltonians use the dense eigensolver, accepting case1
/// when lambda <= a + guard and case2 when lambda > b + guard.
Decision decide(const LocalHamiltonian &hamiltonian, const PromiseInstance &promise,
                const SolverLimits &limits = {});

} // namespace lhred
