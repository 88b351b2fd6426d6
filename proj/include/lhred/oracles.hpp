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

#include <cstdint>

#include "lhred/graph.hpp"
#include "lhred/operator.hpp"

namespace lhred {

inline constexpr int default_max_enum_qubits = 28;

struct SolverLimits {
    int max_enum_qubits = default_max_enum_qubits;
    int max_dense_qubits = default_max_dense_qubits;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

unsigned resolve_workers(unsigned requested) noexcept;

struct OracleResult {
    std::int64_t optimum = 0;
    /// Attains the optimum; smallest basis index among all optimal states.
    Assignment witness;
    std::uint64_t states_examined = 0;
};

/// Exhaustive maximum cut (total weight of crossing edges) over all 2^n
/// vertex bipartitions.
OracleResult brute_force_max_cut(const Graph &graph, const SolverLimits &limits = {});

/// Exhaustive maximum independent set size over all 2^n vertex subsets.
OracleResult brute_force_max_independent_set(const Graph &graph, const SolverLimits &limits = {});

struct GroundState {
    EnergyValue energy;
    Assignment witness;
    std::uint64_t states_examined = 0;
};

/// Minimum of basis_energy over every computational basis state. Diagonal
/// Hamiltonians only. The result is independent of the worker count; ties go
/// to the smallest basis index.
GroundState min_energy(const LocalHamiltonian &hamiltonian, const SolverLimits &limits = {});

/// Least eigenvalue of dense_matrix(H) from a full Hermitian eigensolve.
double dense_min_eigenvalue(const LocalHamiltonian &hamiltonian, const SolverLimits &limits = {});

} // namespace lhred
